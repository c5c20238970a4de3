#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "numberwall/field.hpp"

namespace nwall {

/// f_n: 0 or 1 according to the odd part of |n| mod 4, with f_0 = 0 and f_{-n} = 1 - f_n.
int paper_folding_bit(std::int64_t n);
FieldElement paper_folding(std::int64_t n, Modulus mod);

/// f_{n+1} - f_{n-1}.
FieldElement pagoda(std::int64_t n, Modulus mod);

/// Bit parity of n, defined for n >= 0 only.
FieldElement thue_morse(std::int64_t n, Modulus mod);

/**
 * One-dimensional uniform substitution with a letter coding.
 * Letters are 0..size-1. The left seed fills positions n <= 0, the right seed n >= 1.
 */
struct SubstSystem1D {
    int k = 2;
    std::vector<std::vector<int>> images;  // letter -> word of length k
    std::vector<int> coding;               // letter -> output symbol
    int left_seed = 0;
    int right_seed = 0;

    int size() const { return static_cast<int>(images.size()); }
    /// Throws DomainError when lengths are wrong or a seed is not prolongable.
    void validate() const;
    int letter_at(std::int64_t n) const;
};

/// The four-letter system generating the paper-folding sequence (letters 0..3).
SubstSystem1D paper_folding_system();

/// Coded word on positions lo..hi.
std::vector<int> expand_1d(const SubstSystem1D& sys, std::int64_t lo, std::int64_t hi);
/// Uncoded letters on positions lo..hi.
std::vector<int> expand_1d_letters(const SubstSystem1D& sys, std::int64_t lo, std::int64_t hi);

/// Iterate the substitution: psi^e as a system with factor k^e.
SubstSystem1D substitution_power(const SubstSystem1D& sys, int e);

enum class SequenceKind { PaperFolding, Pagoda, ThueMorse, Constant, File, Subst };

/**
 * A sequence over F_p with a known domain of definition.
 * Reads outside the domain throw DomainError.
 */
class SequenceSource {
public:
    static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

    static SequenceSource paper_folding(Modulus mod);
    static SequenceSource pagoda(Modulus mod);
    static SequenceSource thue_morse(Modulus mod);
    static SequenceSource constant(Modulus mod, std::int64_t value);
    static SequenceSource from_values(Modulus mod, std::int64_t lo, std::vector<int> values);
    static SequenceSource from_system(Modulus mod, SubstSystem1D sys);
    /// Parses the `seq p=<p> lo=<lo> hi=<hi>` text format.
    static SequenceSource read(std::istream& in);
    static SequenceSource read_file(const std::string& path);

    SequenceKind kind() const { return kind_; }
    const Modulus& modulus() const { return mod_; }
    std::string name() const;

    /// Inclusive domain; -kUnbounded / kUnbounded mean no limit.
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    bool bounded() const { return lo_ != -kUnbounded || hi_ != kUnbounded; }
    bool defined(std::int64_t n) const { return n >= lo_ && n <= hi_; }

    int residue(std::int64_t n) const;
    FieldElement at(std::int64_t n) const { return {residue(n), mod_}; }
    /// Residues on [a, b], which must lie in the domain.
    std::vector<int> residues(std::int64_t a, std::int64_t b) const;

    void write(std::ostream& out, std::int64_t a, std::int64_t b) const;

private:
    SequenceSource(SequenceKind kind, Modulus mod, std::int64_t lo, std::int64_t hi)
        : kind_(kind), mod_(mod), lo_(lo), hi_(hi) {}

    SequenceKind kind_;
    Modulus mod_;
    std::int64_t lo_, hi_;
    std::int64_t constant_ = 0;
    std::shared_ptr<const std::vector<int>> values_;
    std::shared_ptr<const SubstSystem1D> system_;
};

}  // namespace nwall
