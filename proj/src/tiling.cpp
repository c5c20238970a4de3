#include "numberwall/tiling.hpp"

#include "numberwall/intmath.hpp"

namespace nwall {

const std::vector<int>& Substitution::image(int tile) const {
    if (!has(tile)) throw DomainError("tile " + std::to_string(tile) + " has no substitution image");
    return images[static_cast<std::size_t>(tile - base)];
}

const std::vector<std::uint8_t>& Coding::image(int tile) const {
    if (tile < base || tile >= base + static_cast<int>(images.size()))
        throw DomainError("tile " + std::to_string(tile) + " has no coding");
    return images[static_cast<std::size_t>(tile - base)];
}

bool Coding::injective() const {
    std::set<std::vector<std::uint8_t>> seen(images.begin(), images.end());
    return seen.size() == images.size();
}

int centered_start(int l, int r) { return (l + 1) / 2 - (l - r + 1) / 2 + 1; }

int TilingSystem::offset() const { return centering == Centering::Centered ? centered_start(tau.l, overlap) - 1 : 0; }

void TilingSystem::validate() const {
    const int k = phi.k;
    if (k < 2) throw DomainError("substitution factor must be at least 2");
    for (const auto& img : phi.images) {
        if (static_cast<int>(img.size()) != k * k) throw DomainError("substitution image has wrong size");
        for (int t : img)
            if (!phi.has(t)) throw DomainError("substitution image uses unknown tile " + std::to_string(t));
    }
    if (tau.l < 1 || overlap < 0 || overlap >= tau.l) throw DomainError("need 0 <= r < l");
    if (static_cast<int>(tau.images.size()) != phi.size() || tau.base != phi.base)
        throw DomainError("coding and substitution cover different alphabets");
    for (const auto& img : tau.images)
        if (static_cast<int>(img.size()) != tau.l * tau.l) throw DomainError("coded image has wrong size");
    if (centering == Centering::Centered && ((tau.l - 1) % 2 != 0 || pitch() % 2 != 0))
        throw DomainError("centered decoding needs even l-1 and even l-r");
    for (int o = 0; o < 4; ++o) {
        if (!seeds[o]) continue;
        const int s = *seeds[o];
        const int row = (o & 2) ? 1 : k, col = (o & 1) ? 1 : k;
        if (!phi.has(s) || phi.at(s, row, col) != s)
            throw DomainError("seed " + std::to_string(s) + " is not (" + std::to_string(o >> 1) + "," +
                              std::to_string(o & 1) + ")-prolongable");
    }
}

namespace {

TileGrid expand_rec(const TilingSystem& sys, const Region& r) {
    TileGrid g(r.m_lo, r.m_hi, r.n_lo, r.n_hi);
    if (r.m_lo >= 0 && r.m_hi <= 1 && r.n_lo >= 0 && r.n_hi <= 1) {
        for (std::int64_t i = r.m_lo; i <= r.m_hi; ++i)
            for (std::int64_t j = r.n_lo; j <= r.n_hi; ++j) {
                const auto& s = sys.seeds[orthant_of(i, j)];
                if (!s) throw DomainError("no seed for the orthant of (" + std::to_string(i) + ", " + std::to_string(j) + ")");
                g(i, j) = *s;
            }
        return g;
    }
    const int k = sys.phi.k;
    const Region parent{ceil_div(r.m_lo, k), ceil_div(r.m_hi, k), ceil_div(r.n_lo, k), ceil_div(r.n_hi, k)};
    const TileGrid up = expand_rec(sys, parent);
    for (std::int64_t i = r.m_lo; i <= r.m_hi; ++i)
        for (std::int64_t j = r.n_lo; j <= r.n_hi; ++j)
            g(i, j) = sys.phi.at(up(ceil_div(i, k), ceil_div(j, k)), static_cast<int>(rep_mod(i, k)),
                                 static_cast<int>(rep_mod(j, k)));
    return g;
}

}  // namespace

TileGrid expand(const TilingSystem& sys, const Region& region) {
    sys.validate();
    return expand_rec(sys, region);
}

ValueGrid decode(const TilingSystem& sys, const Region& region) {
    const int c = sys.pitch(), off = sys.offset();
    const Region tiles{ceil_div(region.m_lo, c), ceil_div(region.m_hi, c), ceil_div(region.n_lo, c),
                       ceil_div(region.n_hi, c)};
    const TileGrid t = expand(sys, tiles);
    ValueGrid out(region.m_lo, region.m_hi, region.n_lo, region.n_hi);
    for (std::int64_t m = region.m_lo; m <= region.m_hi; ++m)
        for (std::int64_t n = region.n_lo; n <= region.n_hi; ++n)
            out(m, n) = sys.tau.at(t(ceil_div(m, c), ceil_div(n, c)), static_cast<int>(rep_mod(m, c)) + off,
                                   static_cast<int>(rep_mod(n, c)) + off);
    return out;
}

std::string ConsistencyViolation::describe() const {
    return "tile (" + std::to_string(i) + ", " + std::to_string(j) + ") disagrees with its " +
           (axis == 0 ? "lower" : "right") + " neighbour at r'=" + std::to_string(r_prime) + ", index " +
           std::to_string(other);
}

std::optional<ConsistencyViolation> check_consistency(const TilingSystem& sys, const Region& tiles) {
    const int l = sys.tau.l, r = sys.overlap, c = l - r;
    if (r == 0) return std::nullopt;
    const TileGrid t = expand(sys, tiles);
    for (std::int64_t i = tiles.m_lo; i <= tiles.m_hi; ++i)
        for (std::int64_t j = tiles.n_lo; j <= tiles.n_hi; ++j) {
            const int here = t(i, j);
            if (i < tiles.m_hi) {
                const int below = t(i + 1, j);
                for (int rp = c + 1; rp <= l; ++rp)
                    for (int x = 1; x <= l; ++x)
                        if (sys.tau.at(here, rp, x) != sys.tau.at(below, rp - c, x))
                            return ConsistencyViolation{i, j, 0, rp, x};
            }
            if (j < tiles.n_hi) {
                const int right = t(i, j + 1);
                for (int rp = c + 1; rp <= l; ++rp)
                    for (int x = 1; x <= l; ++x)
                        if (sys.tau.at(here, x, rp) != sys.tau.at(right, x, rp - c))
                            return ConsistencyViolation{i, j, 1, rp, x};
            }
        }
    return std::nullopt;
}

std::set<Pattern> enumerate_patterns(const TileGrid& grid, int s) {
    if (s < 1 || grid.rows() < s || grid.cols() < s) throw DomainError("grid smaller than the pattern size");
    std::set<Pattern> out;
    Pattern p(static_cast<std::size_t>(s * s));
    for (std::int64_t i = grid.i_lo(); i + s - 1 <= grid.i_hi(); ++i)
        for (std::int64_t j = grid.j_lo(); j + s - 1 <= grid.j_hi(); ++j) {
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b) p[static_cast<std::size_t>(a * s + b)] = grid(i + a, j + b);
            out.insert(p);
        }
    return out;
}

ClosureReport two_pattern_closure(const TilingSystem& sys, std::array<std::int64_t, 2> m,
                                  std::array<std::int64_t, 2> M) {
    const int k = sys.phi.k;
    if (!(m[0] < 0 && 0 < M[0] && m[1] < 0 && 0 < M[1])) throw DomainError("closure needs m < 0 < M");
    const TileGrid small = expand(sys, {m[0] + 1, M[0], m[1] + 1, M[1]});
    const TileGrid large = expand(sys, {k * m[0] + 1, k * M[0], k * m[1] + 1, k * M[1]});
    const auto have = enumerate_patterns(small, 2);
    ClosureReport rep;
    rep.small_patterns = static_cast<std::int64_t>(have.size());
    std::set<Pattern> seen;
    for (std::int64_t i = large.i_lo(); i < large.i_hi(); ++i)
        for (std::int64_t j = large.j_lo(); j < large.j_hi(); ++j) {
            Pattern p{large(i, j), large(i, j + 1), large(i + 1, j), large(i + 1, j + 1)};
            if (!have.count(p) && !rep.missing) {
                rep.missing = p;
                rep.missing_at = {{i, j}};
            }
            seen.insert(std::move(p));
        }
    rep.large_patterns = static_cast<std::int64_t>(seen.size());
    rep.ok = !rep.missing.has_value();
    return rep;
}

std::int64_t cover_size(std::int64_t l, std::int64_t r, std::int64_t r_prime) {
    if (r < 0 || r >= l || r_prime < 1) throw DomainError("cover_size needs 0 <= r < l and r' >= 1");
    return 1 + std::max<std::int64_t>(0, ceil_div(r_prime - (r + 1), l - r));
}

ValueGrid decode_pattern(const TilingSystem& sys, const TileGrid& pattern) {
    const int l = sys.tau.l, r = sys.overlap, c = l - r;
    const std::int64_t msz = pattern.rows();
    if (pattern.cols() != msz) throw DomainError("pattern must be square");
    const std::int64_t side = c * msz + r;
    // position n = n' c + n'' with 1 <= n'' <= c; the last tile also supplies the trailing overlap
    auto split = [&](std::int64_t n, std::int64_t& tile, int& cell) {
        const std::int64_t np = ceil_div(n, c) - 1, npp = n - np * c;
        tile = std::min(np + 1, msz);
        cell = static_cast<int>(npp + c * std::max<std::int64_t>(0, np - msz + 1));
    };
    ValueGrid out(1, side, 1, side);
    for (std::int64_t a = 1; a <= side; ++a)
        for (std::int64_t b = 1; b <= side; ++b) {
            std::int64_t ta, tb;
            int ca, cb;
            split(a, ta, ca);
            split(b, tb, cb);
            out(a, b) = sys.tau.at(pattern(pattern.i_lo() + ta - 1, pattern.j_lo() + tb - 1), ca, cb);
        }
    return out;
}

}  // namespace nwall
