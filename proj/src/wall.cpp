#include "numberwall/wall.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace nwall {

WallSegment::WallSegment(Modulus mod, std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi)
    : mod_(mod), m_lo_(m_lo), m_hi_(m_hi), n_lo_(n_lo), n_hi_(n_hi) {
    if (m_hi < m_lo || n_hi < n_lo) throw DomainError("empty wall region");
    if (mod.value() >= kUnknown) throw DomainError("wall storage needs p < 255");
    data_.assign(static_cast<std::size_t>(rows() * cols()), kUnknown);
}

std::uint8_t WallSegment::raw(std::int64_t m, std::int64_t n) const {
    if (contains(m, n)) return data_[index(m, n)];
    if (m == -1) return 1;
    if (m < -1) return 0;
    return kUnknown;
}

int WallSegment::at(std::int64_t m, std::int64_t n) const {
    std::uint8_t v = raw(m, n);
    if (v == kUnknown) {
        throw DomainError("wall entry (" + std::to_string(m) + ", " + std::to_string(n) +
                          (contains(m, n) ? ") is undetermined" : ") is outside the segment"));
    }
    return v;
}

void WallSegment::set(std::int64_t m, std::int64_t n, std::uint8_t v) {
    if (!contains(m, n)) throw DomainError("set outside wall segment");
    data_[index(m, n)] = v;
}

bool WallSegment::column_valid(std::int64_t n) const {
    for (std::int64_t m = m_lo_; m <= m_hi_; ++m)
        if (data_[index(m, n)] == kUnknown) return false;
    return true;
}

std::int64_t WallSegment::invalid_count() const {
    return std::count(data_.begin(), data_.end(), kUnknown);
}

WallSegment WallSegment::crop(std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi) const {
    if (!contains(m_lo, n_lo) || !contains(m_hi, n_hi)) throw DomainError("crop leaves the wall segment");
    WallSegment out(mod_, m_lo, m_hi, n_lo, n_hi);
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
        for (std::int64_t n = n_lo; n <= n_hi; ++n) out.set(m, n, raw(m, n));
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("NW_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

namespace {

// Working grid for rows 0..top over data columns [lo, hi].
struct Canvas {
    std::int64_t lo, hi, width, top;
    std::vector<std::uint8_t> cells;

    Canvas(std::int64_t lo_, std::int64_t hi_, std::int64_t top_)
        : lo(lo_), hi(hi_), width(hi_ - lo_ + 1), top(top_),
          cells(static_cast<std::size_t>((top_ + 1) * (hi_ - lo_ + 1)), kUnknown) {}

    std::uint8_t get(std::int64_t m, std::int64_t n) const {
        if (m <= -2) return 0;
        if (m == -1) return 1;
        if (n < lo || n > hi) return kUnknown;
        return cells[static_cast<std::size_t>(m * width + (n - lo))];
    }
    std::uint8_t& ref(std::int64_t m, std::int64_t n) {
        return cells[static_cast<std::size_t>(m * width + (n - lo))];
    }
};

bool any_unknown(std::initializer_list<std::uint8_t> vs) {
    for (auto v : vs)
        if (v == kUnknown) return true;
    return false;
}

int checked_div(const SmallField& f, int a, int b, std::int64_t m, std::int64_t n) {
    if (b == 0) {
        throw std::logic_error("wall builder divided by zero at (" + std::to_string(m) + ", " +
                               std::to_string(n) + ")");
    }
    return f.div(a, b);
}

std::uint8_t compute_entry(const Canvas& c, const SmallField& f, std::int64_t m, std::int64_t n) {
    const std::uint8_t above2 = c.get(m - 2, n);
    if (above2 == kUnknown) return kUnknown;
    if (above2 != 0) {
        const std::uint8_t mid = c.get(m - 1, n), left = c.get(m - 1, n - 1), right = c.get(m - 1, n + 1);
        if (any_unknown({mid, left, right})) return kUnknown;
        return static_cast<std::uint8_t>(
            checked_div(f, f.sub(f.mul(mid, mid), f.mul(left, right)), above2, m, n));
    }

    // Below a window: locate its top row in this column, then its left and right frame columns.
    std::int64_t p = 1;
    for (;;) {
        const std::uint8_t v = c.get(m - p - 2, n);
        if (v == kUnknown) return kUnknown;
        if (v != 0) break;
        ++p;
    }
    const std::int64_t top = m - p - 1;
    bool cut = false;
    std::int64_t q = 1, k = 1;
    for (;; ++q) {
        const std::uint8_t v = c.get(top, n - q);
        if (v == kUnknown) { cut = true; break; }
        if (v != 0) break;
    }
    for (;; ++k) {
        const std::uint8_t v = c.get(top, n + k);
        if (v == kUnknown) { cut = true; break; }
        if (v != 0) break;
    }
    const std::int64_t delta = q + k;
    if (cut) return delta > p + 2 ? 0 : kUnknown;  // q, k are lower bounds here
    if (delta > p + 2) return 0;

    if (delta == p + 2) {
        const std::uint8_t left = c.get(m - q, n - q), right = c.get(m - k, n + k), topc = c.get(m - delta, n - q + k);
        if (any_unknown({left, right, topc})) return kUnknown;
        int v = checked_div(f, f.mul(left, right), topc, m, n);
        if (((delta - 1) * k) % 2 != 0) v = f.neg(v);
        return static_cast<std::uint8_t>(v);
    }
    if (delta != p + 1) {
        throw std::logic_error("zero run below (" + std::to_string(m) + ", " + std::to_string(n) +
                               ") is not a square window");
    }

    // Outer frame: frame sequences indexed by k from the top-left and bottom-right corners.
    const std::int64_t tr = m - delta - 1;  // top inner-frame row
    const std::uint8_t a_k = c.get(tr, n + k - q), a_km = c.get(tr, n + k - q - 1), e_k = c.get(tr - 1, n + k - q);
    const std::uint8_t b_k = c.get(m - q - 1, n - q), b_km = c.get(m - q - 2, n - q), f_k = c.get(m - q - 1, n - q - 1);
    const std::uint8_t c_k = c.get(m - k - 1, n + k), c_km = c.get(m - k, n + k), g_k = c.get(m - k - 1, n + k + 1);
    const std::uint8_t d_k = c.get(m - 1, n), d_km = c.get(m - 1, n + 1);
    if (any_unknown({a_k, a_km, e_k, b_k, b_km, f_k, c_k, c_km, g_k, d_k, d_km})) return kUnknown;

    const int ratio_top = checked_div(f, a_k, a_km, m, n);
    const int ratio_left = checked_div(f, b_k, b_km, m, n);
    const int ratio_right = checked_div(f, c_k, c_km, m, n);
    const int ratio_bottom = checked_div(f, d_k, d_km, m, n);

    const int upper = f.mul(ratio_left, checked_div(f, e_k, a_k, m, n));
    int side = f.sub(f.mul(ratio_top, checked_div(f, f_k, b_k, m, n)),
                     f.mul(ratio_bottom, checked_div(f, g_k, c_k, m, n)));
    if (k % 2 != 0) side = f.neg(side);
    const int v = f.mul(checked_div(f, d_k, ratio_right, m, n), f.add(upper, side));
    return static_cast<std::uint8_t>(v);
}

void compute_row(Canvas& c, const SmallField& f, std::int64_t m, int threads) {
    const std::int64_t a = c.lo + m, b = c.hi - m;
    if (a > b) return;
    auto work = [&](std::int64_t from, std::int64_t to) {
        for (std::int64_t n = from; n <= to; ++n) c.ref(m, n) = compute_entry(c, f, m, n);
    };
    const std::int64_t len = b - a + 1;
    if (threads <= 1 || len < 4096) {
        work(a, b);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (len + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t from = a + t * chunk, to = std::min(b, from + chunk - 1);
        if (from <= to) pool.emplace_back(work, from, to);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

WallSegment build_from_values(Modulus mod, std::int64_t lo, const std::vector<int>& theta, std::int64_t m_lo,
                              std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi, int threads) {
    WallSegment out(mod, m_lo, m_hi, n_lo, n_hi);
    for (std::int64_t m = m_lo; m <= std::min<std::int64_t>(m_hi, -1); ++m)
        for (std::int64_t n = n_lo; n <= n_hi; ++n) out.set(m, n, m == -1 ? 1 : 0);
    if (m_hi < 0 || theta.empty()) return out;

    const SmallField f(mod);
    const std::int64_t hi = lo + static_cast<std::int64_t>(theta.size()) - 1;
    Canvas c(lo, hi, m_hi);
    for (std::int64_t n = lo; n <= hi; ++n) c.ref(0, n) = static_cast<std::uint8_t>(mod.reduce(theta[n - lo]));
    for (std::int64_t m = 1; m <= m_hi; ++m) compute_row(c, f, m, threads);

    for (std::int64_t m = std::max<std::int64_t>(m_lo, 0); m <= m_hi; ++m)
        for (std::int64_t n = n_lo; n <= n_hi; ++n) out.set(m, n, c.get(m, n));
    return out;
}

WallSegment build(const SequenceSource& source, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi,
                  std::int64_t m_lo, BuildOptions opts) {
    if (m_lo > -2) throw DomainError("build needs m_lo <= -2 for the sentinel rows");
    if (n_hi < n_lo || m_hi < m_lo) throw DomainError("empty wall region");
    const int threads = opts.threads > 0 ? opts.threads : default_threads();
    const std::int64_t reach = std::max<std::int64_t>(m_hi, 0);

    for (std::int64_t extra = 16;; extra *= 4) {
        std::int64_t lo = n_lo - reach - extra, hi = n_hi + reach + extra;
        lo = std::max(lo, source.lo());
        hi = std::min(hi, source.hi());
        if (lo > n_lo || hi < n_hi) {
            if (!opts.allow_partial) {
                throw DomainError("insufficient sequence domain: columns [" + std::to_string(n_lo) + ", " +
                                  std::to_string(n_hi) + "] need data the source does not define");
            }
        }
        std::vector<int> theta;
        if (lo <= hi) theta = source.residues(lo, hi);
        WallSegment w = build_from_values(source.modulus(), lo, theta, m_lo, m_hi, n_lo, n_hi, threads);
        const bool clipped = lo == source.lo() || hi == source.hi();
        if (w.all_valid()) return w;
        if (clipped || extra > (1 << 14)) {
            if (opts.allow_partial) return w;
            throw DomainError("insufficient sequence domain: " + std::to_string(w.invalid_count()) +
                              " entries of the requested segment are undetermined");
        }
    }
}

int determinant_mod(std::vector<std::vector<int>> a, const SmallField& f) {
    const std::size_t n = a.size();
    int det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        const int inv = f.inv(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const int factor = f.mul(a[r][col], inv);
            for (std::size_t j = col; j < n; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
        }
    }
    return det;
}

FieldElement oracle_entry(const SequenceSource& source, std::int64_t m, std::int64_t n) {
    const Modulus& mod = source.modulus();
    if (m == -1) return {1, mod};
    if (m < -1) return {0, mod};
    const SmallField f(mod);
    const auto theta = source.residues(n - m, n + m);  // theta[t] = theta_{n-m+t}
    const std::size_t s = static_cast<std::size_t>(m + 1);
    std::vector<std::vector<int>> a(s, std::vector<int>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = theta[m + j - i];
    return {determinant_mod(std::move(a), f), mod};
}

std::vector<int> leading_minors(std::vector<std::vector<int>> a, const SmallField& f) {
    const std::size_t n = a.size();
    std::vector<int> pivot_col(n, -1), pivot_val(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n) continue;
        pivot_col[i] = static_cast<int>(j);
        pivot_val[i] = a[i][j];
        const int inv = f.inv(a[i][j]);
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][j] == 0) continue;
            const int factor = f.mul(a[r][j], inv);
            for (std::size_t c = j; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[i][c]));
        }
        // Clearing row i right of the pivot is a pure column operation; only the pivot survives.
    }
    std::vector<int> minors(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        bool full = true;
        for (std::size_t i = 0; i < k && full; ++i)
            full = pivot_col[i] >= 0 && static_cast<std::size_t>(pivot_col[i]) < k;
        if (!full) continue;
        int det = 1;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i) {
            det = f.mul(det, pivot_val[i]);
            for (std::size_t i2 = i + 1; i2 < k; ++i2)
                if (pivot_col[i] > pivot_col[i2]) ++inversions;
        }
        minors[k - 1] = inversions % 2 ? f.neg(det) : det;
    }
    return minors;
}

std::vector<int> oracle_column(const SequenceSource& source, std::int64_t n, std::int64_t depth) {
    const SmallField f(source.modulus());
    const auto theta = source.residues(n - depth, n + depth);
    const std::size_t s = static_cast<std::size_t>(depth + 1);
    std::vector<std::vector<int>> a(s, std::vector<int>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = theta[depth + j - i];
    return leading_minors(std::move(a), f);
}

Palette default_palette(int p) {
    Palette pal;
    pal[0] = 0;
    for (int r = 1; r < p; ++r) pal[r] = p == 2 ? 255 : 96 + (159 * (r - 1)) / (p - 2);
    return pal;
}

std::string render_pgm(const WallSegment& wall, const Palette& palette) {
    std::ostringstream out;
    out << "P2\n" << wall.cols() << " " << wall.rows() << "\n255\n";
    for (std::int64_t m = wall.m_lo(); m <= wall.m_hi(); ++m) {
        for (std::int64_t n = wall.n_lo(); n <= wall.n_hi(); ++n) {
            const int v = wall.at(m, n);
            auto it = palette.find(v);
            if (it == palette.end()) throw DomainError("palette has no gray for residue " + std::to_string(v));
            out << it->second << (n == wall.n_hi() ? '\n' : ' ');
        }
    }
    return out.str();
}

void write_csv(std::ostream& out, const WallSegment& wall) {
    out << "wall p=" << wall.p() << " mlo=" << wall.m_lo() << " mhi=" << wall.m_hi() << " nlo=" << wall.n_lo()
        << " nhi=" << wall.n_hi() << "\n";
    for (std::int64_t m = wall.m_lo(); m <= wall.m_hi(); ++m) {
        for (std::int64_t n = wall.n_lo(); n <= wall.n_hi(); ++n) {
            const auto v = wall.raw(m, n);
            if (n != wall.n_lo()) out << ',';
            if (v == kUnknown) out << '?';
            else out << static_cast<int>(v);
        }
        out << '\n';
    }
}

WallSegment read_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw DomainError("empty wall CSV");
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "wall") throw DomainError("wall CSV must start with `wall`");
    std::map<std::string, long long> kv;
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw DomainError("bad wall CSV header token " + tok);
        kv[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
    }
    for (const char* key : {"p", "mlo", "mhi", "nlo", "nhi"})
        if (!kv.count(key)) throw DomainError(std::string("wall CSV header lacks ") + key);
    WallSegment w{Modulus(kv["p"]), kv["mlo"], kv["mhi"], kv["nlo"], kv["nhi"]};
    std::string line;
    for (std::int64_t m = w.m_lo(); m <= w.m_hi(); ++m) {
        if (!std::getline(in, line)) throw DomainError("wall CSV ends early");
        std::istringstream ls(line);
        std::string cell;
        std::int64_t n = w.n_lo();
        while (std::getline(ls, cell, ',')) {
            if (n > w.n_hi()) throw DomainError("wall CSV row too long");
            if (cell == "?") w.set(m, n, kUnknown);
            else w.set(m, n, static_cast<std::uint8_t>(w.modulus().reduce(std::stoll(cell))));
            ++n;
        }
        if (n != w.n_hi() + 1) throw DomainError("wall CSV row too short");
    }
    return w;
}

}  // namespace nwall
