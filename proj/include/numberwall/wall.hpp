#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "numberwall/field.hpp"
#include "numberwall/sequences.hpp"

namespace nwall {

/// Residue value marking an entry the builder could not determine from the data it had.
inline constexpr std::uint8_t kUnknown = 255;

/**
 * Rectangular portion of a Number Wall, rows [m_lo, m_hi] x columns [n_lo, n_hi].
 * Rows m <= -1 follow the sentinel rule (1 on row -1, 0 above) even outside the stored rectangle.
 */
class WallSegment {
public:
    WallSegment(Modulus mod, std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi);

    const Modulus& modulus() const { return mod_; }
    int p() const { return static_cast<int>(mod_.value()); }
    std::int64_t m_lo() const { return m_lo_; }
    std::int64_t m_hi() const { return m_hi_; }
    std::int64_t n_lo() const { return n_lo_; }
    std::int64_t n_hi() const { return n_hi_; }
    std::int64_t rows() const { return m_hi_ - m_lo_ + 1; }
    std::int64_t cols() const { return n_hi_ - n_lo_ + 1; }

    bool contains(std::int64_t m, std::int64_t n) const {
        return m >= m_lo_ && m <= m_hi_ && n >= n_lo_ && n <= n_hi_;
    }
    /// Raw residue or kUnknown; sentinel rows answer for any column.
    std::uint8_t raw(std::int64_t m, std::int64_t n) const;
    /// Residue of a valid entry; throws DomainError for unknown or out-of-range entries.
    int at(std::int64_t m, std::int64_t n) const;
    FieldElement element(std::int64_t m, std::int64_t n) const { return {at(m, n), mod_}; }
    bool valid(std::int64_t m, std::int64_t n) const { return raw(m, n) != kUnknown; }

    void set(std::int64_t m, std::int64_t n, std::uint8_t v);

    /// True iff every stored entry in column n is known.
    bool column_valid(std::int64_t n) const;
    std::int64_t invalid_count() const;
    bool all_valid() const { return invalid_count() == 0; }

    /// Sub-rectangle copy (must lie inside this segment).
    WallSegment crop(std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi) const;

    const std::vector<std::uint8_t>& data() const { return data_; }

private:
    std::size_t index(std::int64_t m, std::int64_t n) const {
        return static_cast<std::size_t>((m - m_lo_) * cols() + (n - n_lo_));
    }

    Modulus mod_;
    std::int64_t m_lo_, m_hi_, n_lo_, n_hi_;
    std::vector<std::uint8_t> data_;
};

struct BuildOptions {
    int threads = 0;             // 0: NW_THREADS or 1
    bool allow_partial = false;  // keep unknown entries instead of throwing
};

/// Thread count from NW_THREADS, defaulting to 1.
int default_threads();

/**
 * Fast construction by the frame-constraint recurrence, row by row.
 * Unbounded sources get their padding widened until the requested rectangle is fully determined;
 * bounded sources leave undeterminable entries as kUnknown (or throw unless allow_partial).
 */
WallSegment build(const SequenceSource& source, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi,
                  std::int64_t m_lo = -2, BuildOptions opts = {});

/// Builder core on an explicit data window: theta holds positions lo, lo+1, ...
WallSegment build_from_values(Modulus mod, std::int64_t lo, const std::vector<int>& theta, std::int64_t m_lo,
                              std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi, int threads = 1);

/// Determinant of a square matrix over F_p by Gaussian elimination with row pivoting.
int determinant_mod(std::vector<std::vector<int>> a, const SmallField& f);

/// (m+1)x(m+1) Toeplitz determinant with theta_n on the diagonal; 1 for m = -1, 0 below.
FieldElement oracle_entry(const SequenceSource& source, std::int64_t m, std::int64_t n);

/**
 * S_{0,n}, ..., S_{depth,n} at once: these are the leading principal minors of one Toeplitz matrix,
 * read off after reducing it with lower/upper unitriangular operations only.
 */
std::vector<int> oracle_column(const SequenceSource& source, std::int64_t n, std::int64_t depth);

/// Uses only the stored minors interface; handy for tests on raw windows.
std::vector<int> leading_minors(std::vector<std::vector<int>> a, const SmallField& f);

using Palette = std::map<int, int>;
/// Zero maps to black, other residues spread over lighter grays.
Palette default_palette(int p);
/// Portable graymap (P2); throws on empty region, unknown entries, or missing palette entries.
std::string render_pgm(const WallSegment& wall, const Palette& palette);

void write_csv(std::ostream& out, const WallSegment& wall);
WallSegment read_csv(std::istream& in);

}  // namespace nwall
