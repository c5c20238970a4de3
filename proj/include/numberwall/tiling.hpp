#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "numberwall/field.hpp"
#include "numberwall/windows.hpp"

namespace nwall {

/** Dense rectangular grid over an integer box [i_lo, i_hi] x [j_lo, j_hi]. */
template <class T>
class Grid {
public:
    Grid() = default;
    Grid(std::int64_t i_lo, std::int64_t i_hi, std::int64_t j_lo, std::int64_t j_hi, T fill = T{})
        : i_lo_(i_lo), i_hi_(i_hi), j_lo_(j_lo), j_hi_(j_hi),
          cells_(static_cast<std::size_t>((i_hi - i_lo + 1) * (j_hi - j_lo + 1)), fill) {
        if (i_hi < i_lo || j_hi < j_lo) throw DomainError("empty grid");
    }

    std::int64_t i_lo() const { return i_lo_; }
    std::int64_t i_hi() const { return i_hi_; }
    std::int64_t j_lo() const { return j_lo_; }
    std::int64_t j_hi() const { return j_hi_; }
    std::int64_t rows() const { return i_hi_ - i_lo_ + 1; }
    std::int64_t cols() const { return j_hi_ - j_lo_ + 1; }
    Region region() const { return {i_lo_, i_hi_, j_lo_, j_hi_}; }
    bool contains(std::int64_t i, std::int64_t j) const {
        return i >= i_lo_ && i <= i_hi_ && j >= j_lo_ && j <= j_hi_;
    }

    T& operator()(std::int64_t i, std::int64_t j) { return cells_[index(i, j)]; }
    const T& operator()(std::int64_t i, std::int64_t j) const { return cells_[index(i, j)]; }
    T at(std::int64_t i, std::int64_t j) const {
        if (!contains(i, j))
            throw DomainError("grid index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
        return cells_[index(i, j)];
    }
    const std::vector<T>& cells() const { return cells_; }
    bool operator==(const Grid&) const = default;

private:
    std::size_t index(std::int64_t i, std::int64_t j) const {
        return static_cast<std::size_t>((i - i_lo_) * (j_hi_ - j_lo_ + 1) + (j - j_lo_));
    }
    std::int64_t i_lo_ = 0, i_hi_ = -1, j_lo_ = 0, j_hi_ = -1;
    std::vector<T> cells_;
};

using TileGrid = Grid<int>;
using ValueGrid = Grid<std::uint8_t>;

/** k-substitution on tiles base..base+size-1; images are k*k, row-major, position (s,t) 1-based. */
struct Substitution {
    int k = 2;
    int base = 1;
    std::vector<std::vector<int>> images;

    int size() const { return static_cast<int>(images.size()); }
    bool has(int tile) const { return tile >= base && tile < base + size(); }
    const std::vector<int>& image(int tile) const;
    int at(int tile, int s, int t) const { return image(tile)[static_cast<std::size_t>((s - 1) * k + (t - 1))]; }
};

/** l-coding; each image is l*l residues, row-major, position (s,t) 1-based. */
struct Coding {
    int l = 1;
    int base = 1;
    std::vector<std::vector<std::uint8_t>> images;

    const std::vector<std::uint8_t>& image(int tile) const;
    std::uint8_t at(int tile, int s, int t) const {
        return image(tile)[static_cast<std::size_t>((s - 1) * l + (t - 1))];
    }
    bool injective() const;
};

enum class Centering { TopLeft, Centered };

/// Orthant index of a lattice point: bit 1 for n_1 >= 1, bit 0 for n_2 >= 1.
inline int orthant_of(std::int64_t i, std::int64_t j) { return (i >= 1 ? 2 : 0) + (j >= 1 ? 1 : 0); }

struct TilingSystem {
    Substitution phi;
    std::array<std::optional<int>, 4> seeds;  // indexed by orthant_of
    Coding tau;
    int overlap = 0;
    Centering centering = Centering::TopLeft;

    int pitch() const { return tau.l - overlap; }
    /// Shift j of the decoding window inside each coded image (0 in top-left mode).
    int offset() const;
    /// Throws DomainError for non-prolongable seeds or malformed tables.
    void validate() const;
};

/// First row/column of the centered window u = floor((l+1)/2) - ceil((l-r)/2) + 1.
int centered_start(int l, int r);

TileGrid expand(const TilingSystem& sys, const Region& region);
/// Values of the decoded tiling on a region of value coordinates.
ValueGrid decode(const TilingSystem& sys, const Region& region);

struct ConsistencyViolation {
    std::int64_t i, j;  // the tile whose lower/right neighbour disagrees
    int axis;           // 0: vertical neighbour, 1: horizontal neighbour
    int r_prime, other;
    std::string describe() const;
};
/// Adjacent coded images agree on their r-wide overlap everywhere in the tile region.
std::optional<ConsistencyViolation> check_consistency(const TilingSystem& sys, const Region& tiles);

using Pattern = std::vector<int>;  // row-major s*s tiles
std::set<Pattern> enumerate_patterns(const TileGrid& grid, int s);

struct ClosureReport {
    bool ok = false;
    std::int64_t small_patterns = 0, large_patterns = 0;
    std::optional<Pattern> missing;
    std::optional<std::pair<std::int64_t, std::int64_t>> missing_at;
};
/// Every 2-pattern of T on k(m, M] already occurs on (m, M], where (m, M] = {m_i < n_i <= M_i}.
ClosureReport two_pattern_closure(const TilingSystem& sys, std::array<std::int64_t, 2> m,
                                  std::array<std::int64_t, 2> M);

/// 1 + ceil((r' - (r+1)) / (l - r)), clipped below at 1.
std::int64_t cover_size(std::int64_t l, std::int64_t r, std::int64_t r_prime);

/// Top-left image of a square tile pattern: side (l-r)*m + r.
ValueGrid decode_pattern(const TilingSystem& sys, const TileGrid& pattern);

}  // namespace nwall
