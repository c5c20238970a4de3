#include "numberwall/windows.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace nwall {

Region full_region(const WallSegment& wall) { return {wall.m_lo(), wall.m_hi(), wall.n_lo(), wall.n_hi()}; }

namespace {

std::string where(std::int64_t m, std::int64_t n) {
    return "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

// Known and nonzero; cells outside the region are consulted through the wall (sentinels included).
bool solid(const WallSegment& w, std::int64_t m, std::int64_t n) {
    const auto v = w.raw(m, n);
    return v != kUnknown && v != 0;
}

}  // namespace

Census census(const WallSegment& wall, const Region& r) {
    if (r.m_lo > r.m_hi || r.n_lo > r.n_hi) throw DomainError("empty census region");
    if (r.m_lo < wall.m_lo() || r.m_hi > wall.m_hi() || r.n_lo < wall.n_lo() || r.n_hi > wall.n_hi())
        throw DomainError("census region lies outside the wall segment");

    const std::int64_t W = r.cols();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(r.rows() * W), 0);
    auto mark = [&](std::int64_t m, std::int64_t n) -> std::uint8_t& {
        return seen[static_cast<std::size_t>((m - r.m_lo) * W + (n - r.n_lo))];
    };
    auto zero = [&](std::int64_t m, std::int64_t n) {
        const int v = wall.at(m, n);  // throws on undetermined entries
        return v == 0;
    };

    Census out;
    for (std::int64_t m = r.m_lo; m <= r.m_hi; ++m) {
        for (std::int64_t n = r.n_lo; n <= r.n_hi; ++n) {
            if (mark(m, n) || !zero(m, n)) continue;

            std::int64_t width = 1, height = 1;
            while (n + width <= r.n_hi && zero(m, n + width)) ++width;
            while (m + height <= r.m_hi && zero(m + height, n)) ++height;

            const bool open_top = !solid(wall, m - 1, n) && !r.contains(m - 1, n);
            const bool open_left = !solid(wall, m, n - 1) && !r.contains(m, n - 1);
            const bool open_right = n + width > r.n_hi && !solid(wall, m, n + width);
            const bool open_bottom = m + height > r.m_hi && !solid(wall, m + height, n);
            if (!open_top && !solid(wall, m - 1, n))
                throw std::logic_error("zero above window corner at " + where(m, n));
            if (!open_left && !solid(wall, m, n - 1))
                throw std::logic_error("zero left of window corner at " + where(m, n));

            if (open_top || open_left || open_right || open_bottom) {
                // Clipped by the region: sweep the whole zero component so it is counted once.
                WindowRecord rec{m, n, std::max(width, height), -1, true};
                std::deque<std::pair<std::int64_t, std::int64_t>> todo{{m, n}};
                mark(m, n) = 1;
                while (!todo.empty()) {
                    auto [a, b] = todo.front();
                    todo.pop_front();
                    const std::int64_t nb[4][2] = {{a - 1, b}, {a + 1, b}, {a, b - 1}, {a, b + 1}};
                    for (const auto& c : nb) {
                        if (!r.contains(c[0], c[1]) || mark(c[0], c[1]) || !zero(c[0], c[1])) continue;
                        mark(c[0], c[1]) = 1;
                        todo.emplace_back(c[0], c[1]);
                    }
                }
                out.windows.push_back(rec);
                ++out.counts[-1];
                continue;
            }

            if (width != height)
                throw std::logic_error("zero block at " + where(m, n) + " is " + std::to_string(height) + "x" +
                                       std::to_string(width) + ", not a square");
            const std::int64_t g = width;
            for (std::int64_t a = m; a < m + g; ++a)
                for (std::int64_t b = n; b < n + g; ++b) {
                    if (!zero(a, b)) throw std::logic_error("nonzero entry inside window at " + where(a, b));
                    mark(a, b) = 1;
                }
            for (std::int64_t t = -1; t <= g; ++t) {
                const std::int64_t ring[4][2] = {{m - 1, n + t}, {m + g, n + t}, {m + t, n - 1}, {m + t, n + g}};
                for (const auto& c : ring)
                    if (!solid(wall, c[0], c[1]))
                        throw std::logic_error("inner frame of window at " + where(m, n) + " vanishes at " +
                                               where(c[0], c[1]));
            }
            out.windows.push_back({m, n, g, g + 1, false});
            ++out.counts[g + 1];
        }
    }
    return out;
}

Census census(const WallSegment& wall) { return census(wall, full_region(wall)); }

std::int64_t max_deficiency(const Census& c) {
    std::int64_t best = 1;
    for (const auto& w : c.windows)
        if (!w.broken && w.m >= 0) best = std::max(best, w.deficiency);
    return best;
}

std::int64_t max_deficiency(const WallSegment& wall) {
    const Region r{std::max<std::int64_t>(wall.m_lo(), 0), wall.m_hi(), wall.n_lo(), wall.n_hi()};
    if (r.m_lo > r.m_hi) return 1;
    return max_deficiency(census(wall, r));
}

}  // namespace nwall
