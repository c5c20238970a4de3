#include "numberwall/sequences.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "numberwall/intmath.hpp"

namespace nwall {

int paper_folding_bit(std::int64_t n) {
    if (n == 0) return 0;
    if (n < 0) return 1 - paper_folding_bit(-n);
    while ((n & 1) == 0) n >>= 1;
    return (n & 3) == 1 ? 0 : 1;
}

FieldElement paper_folding(std::int64_t n, Modulus mod) { return {paper_folding_bit(n), mod}; }

FieldElement pagoda(std::int64_t n, Modulus mod) {
    return {paper_folding_bit(n + 1) - paper_folding_bit(n - 1), mod};
}

FieldElement thue_morse(std::int64_t n, Modulus mod) {
    if (n < 0) throw DomainError("Thue-Morse is one-sided; index " + std::to_string(n) + " < 0");
    return {std::popcount(static_cast<std::uint64_t>(n)) & 1, mod};
}

void SubstSystem1D::validate() const {
    if (k < 2) throw DomainError("substitution factor must be at least 2");
    if (images.empty()) throw DomainError("empty alphabet");
    if (coding.size() != images.size()) throw DomainError("coding does not cover the alphabet");
    for (const auto& w : images) {
        if (static_cast<int>(w.size()) != k) throw DomainError("substitution image has wrong length");
        for (int c : w)
            if (c < 0 || c >= size()) throw DomainError("substitution image leaves the alphabet");
    }
    if (left_seed < 0 || left_seed >= size() || right_seed < 0 || right_seed >= size())
        throw DomainError("seed outside alphabet");
    if (images[left_seed][k - 1] != left_seed)
        throw DomainError("left seed " + std::to_string(left_seed) + " is not prolongable");
    if (images[right_seed][0] != right_seed)
        throw DomainError("right seed " + std::to_string(right_seed) + " is not prolongable");
}

int SubstSystem1D::letter_at(std::int64_t n) const {
    // digits of n read from the seed downward
    std::vector<int> path;
    while (n != 0 && n != 1) {
        path.push_back(static_cast<int>(rep_mod(n, k)) - 1);
        n = ceil_div(n, k);
    }
    int letter = n == 0 ? left_seed : right_seed;
    for (auto it = path.rbegin(); it != path.rend(); ++it) letter = images[letter][*it];
    return letter;
}

SubstSystem1D paper_folding_system() {
    SubstSystem1D s;
    s.k = 2;
    s.images = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    s.coding = {0, 1, 0, 1};
    s.left_seed = 2;
    s.right_seed = 0;
    return s;
}

std::vector<int> expand_1d_letters(const SubstSystem1D& sys, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw DomainError("expand_1d: empty range");
    sys.validate();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(sys.letter_at(n));
    return out;
}

std::vector<int> expand_1d(const SubstSystem1D& sys, std::int64_t lo, std::int64_t hi) {
    auto w = expand_1d_letters(sys, lo, hi);
    for (int& c : w) c = sys.coding[c];
    return w;
}

SubstSystem1D substitution_power(const SubstSystem1D& sys, int e) {
    if (e < 1) throw DomainError("substitution power must be positive");
    SubstSystem1D out = sys;
    for (int i = 1; i < e; ++i) {
        for (int a = 0; a < sys.size(); ++a) {
            std::vector<int> w;
            for (int c : out.images[a])
                w.insert(w.end(), sys.images[c].begin(), sys.images[c].end());
            out.images[a] = std::move(w);
        }
        out.k *= sys.k;
    }
    return out;
}

SequenceSource SequenceSource::paper_folding(Modulus mod) {
    return {SequenceKind::PaperFolding, mod, -kUnbounded, kUnbounded};
}
SequenceSource SequenceSource::pagoda(Modulus mod) {
    return {SequenceKind::Pagoda, mod, -kUnbounded, kUnbounded};
}
SequenceSource SequenceSource::thue_morse(Modulus mod) {
    return {SequenceKind::ThueMorse, mod, 0, kUnbounded};
}
SequenceSource SequenceSource::constant(Modulus mod, std::int64_t value) {
    SequenceSource s{SequenceKind::Constant, mod, -kUnbounded, kUnbounded};
    s.constant_ = mod.reduce(value);
    return s;
}

SequenceSource SequenceSource::from_values(Modulus mod, std::int64_t lo, std::vector<int> values) {
    if (values.empty()) throw DomainError("sequence with empty domain");
    SequenceSource s{SequenceKind::File, mod, lo, lo + static_cast<std::int64_t>(values.size()) - 1};
    for (int& v : values) v = static_cast<int>(mod.reduce(v));
    s.values_ = std::make_shared<const std::vector<int>>(std::move(values));
    return s;
}

SequenceSource SequenceSource::from_system(Modulus mod, SubstSystem1D sys) {
    sys.validate();
    SequenceSource s{SequenceKind::Subst, mod, -kUnbounded, kUnbounded};
    s.system_ = std::make_shared<const SubstSystem1D>(std::move(sys));
    return s;
}

std::string SequenceSource::name() const {
    switch (kind_) {
        case SequenceKind::PaperFolding: return "paperfolding";
        case SequenceKind::Pagoda: return "pagoda";
        case SequenceKind::ThueMorse: return "thuemorse";
        case SequenceKind::Constant: return "const" + std::to_string(constant_);
        case SequenceKind::File: return "file";
        case SequenceKind::Subst: return "subst";
    }
    return "?";
}

int SequenceSource::residue(std::int64_t n) const {
    if (!defined(n))
        throw DomainError("sequence index " + std::to_string(n) + " outside defined interval [" +
                          std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    switch (kind_) {
        case SequenceKind::PaperFolding: return static_cast<int>(nwall::paper_folding(n, mod_).value());
        case SequenceKind::Pagoda: return static_cast<int>(nwall::pagoda(n, mod_).value());
        case SequenceKind::ThueMorse: return static_cast<int>(nwall::thue_morse(n, mod_).value());
        case SequenceKind::Constant: return static_cast<int>(constant_);
        case SequenceKind::File: return (*values_)[static_cast<std::size_t>(n - lo_)];
        case SequenceKind::Subst:
            return static_cast<int>(mod_.reduce(system_->coding[system_->letter_at(n)]));
    }
    return 0;
}

std::vector<int> SequenceSource::residues(std::int64_t a, std::int64_t b) const {
    std::vector<int> out;
    if (a > b) return out;
    if (!defined(a) || !defined(b))
        throw DomainError("sequence range [" + std::to_string(a) + ", " + std::to_string(b) +
                          "] leaves the defined interval");
    out.reserve(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t n = a; n <= b; ++n) out.push_back(residue(n));
    return out;
}

namespace {
std::int64_t header_field(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) throw DomainError("sequence header: expected " + key + "=");
    try {
        return std::stoll(tok.substr(key.size() + 1));
    } catch (const std::exception&) {
        throw DomainError("sequence header: bad value for " + key);
    }
}
}  // namespace

SequenceSource SequenceSource::read(std::istream& in) {
    std::string tag, tp, tlo, thi;
    if (!(in >> tag >> tp >> tlo >> thi) || tag != "seq")
        throw DomainError("sequence file must start with `seq p=<p> lo=<lo> hi=<hi>`");
    Modulus mod(header_field(tp, "p"));
    std::int64_t lo = header_field(tlo, "lo"), hi = header_field(thi, "hi");
    if (hi < lo) throw DomainError("sequence header: hi < lo");
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    long long v;
    while (in >> v) vals.push_back(static_cast<int>(mod.reduce(v)));
    if (static_cast<std::int64_t>(vals.size()) != hi - lo + 1)
        throw DomainError("sequence file: expected " + std::to_string(hi - lo + 1) + " residues, found " +
                          std::to_string(vals.size()));
    return from_values(mod, lo, std::move(vals));
}

SequenceSource SequenceSource::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sequence file " + path);
    return read(in);
}

void SequenceSource::write(std::ostream& out, std::int64_t a, std::int64_t b) const {
    auto vals = residues(a, b);
    out << "seq p=" << mod_.value() << " lo=" << a << " hi=" << b << "\n";
    for (std::size_t i = 0; i < vals.size(); ++i) out << vals[i] << ((i + 1) % 64 == 0 ? '\n' : ' ');
    out << "\n";
}

}  // namespace nwall
