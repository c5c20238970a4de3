#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "numberwall/wall.hpp"

namespace nwall {

struct Region {
    std::int64_t m_lo, m_hi, n_lo, n_hi;

    bool contains(std::int64_t m, std::int64_t n) const {
        return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi;
    }
    std::int64_t rows() const { return m_hi - m_lo + 1; }
    std::int64_t cols() const { return n_hi - n_lo + 1; }
};

/** A maximal zero square; broken windows have deficiency -1 and their visible extent as side. */
struct WindowRecord {
    std::int64_t m = 0, n = 0;  // top-left zero entry
    std::int64_t side = 0;
    std::int64_t deficiency = 0;
    bool broken = false;

    bool operator==(const WindowRecord&) const = default;
};

struct Census {
    std::map<std::int64_t, std::int64_t> counts;  // deficiency -> number of windows
    std::vector<WindowRecord> windows;            // in row-major order of top-left corners
};

Region full_region(const WallSegment& wall);

/**
 * Every maximal zero square inside the region, each reported once.
 * Zero sets that are not squares with a nonzero surrounding ring raise std::logic_error.
 */
Census census(const WallSegment& wall, const Region& region);
Census census(const WallSegment& wall);

/// Max deficiency over unbroken windows whose top row is >= 0; 1 when there are none.
std::int64_t max_deficiency(const Census& c);
std::int64_t max_deficiency(const WallSegment& wall);

}  // namespace nwall
