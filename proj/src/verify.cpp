#include "numberwall/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "numberwall/intmath.hpp"
#include "numberwall/wall.hpp"
#include "numberwall/windows.hpp"

namespace nwall {

namespace {

Obligation make(std::string name) {
    Obligation o;
    o.name = std::move(name);
    o.pass = true;
    return o;
}

void fail(Obligation& o, std::string why, std::optional<std::array<std::int64_t, 2>> at = std::nullopt) {
    if (!o.pass) return;  // keep the first failure
    o.pass = false;
    o.detail = std::move(why);
    o.at = at;
}

std::string set_text(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

/// Zero (g x g)-squares of an l x l image, as their top-left cells (1-based).
std::vector<std::pair<int, int>> zero_squares(const std::vector<std::uint8_t>& img, int l, int g) {
    // nz(s, t): nonzero count in [1, s] x [1, t]
    std::vector<int> nz(static_cast<std::size_t>((l + 1) * (l + 1)), 0);
    auto at = [&](int s, int t) -> int& { return nz[static_cast<std::size_t>(s * (l + 1) + t)]; };
    for (int s = 1; s <= l; ++s)
        for (int t = 1; t <= l; ++t)
            at(s, t) = (img[static_cast<std::size_t>((s - 1) * l + (t - 1))] != 0) + at(s - 1, t) + at(s, t - 1) -
                       at(s - 1, t - 1);
    std::vector<std::pair<int, int>> out;
    for (int s = 1; s + g - 1 <= l; ++s)
        for (int t = 1; t + g - 1 <= l; ++t) {
            const int s2 = s + g - 1, t2 = t + g - 1;
            if (at(s2, t2) - at(s - 1, t2) - at(s2, t - 1) + at(s - 1, t - 1) == 0) out.emplace_back(s, t);
        }
    return out;
}

std::string coding_row(const Coding& tau, int tile, int row, int from, int to) {
    std::string s;
    for (int c = from; c <= to; ++c) s += static_cast<char>('0' + tau.at(tile, row, c));
    return s;
}

}  // namespace

bool Certificate::pass() const {
    return !obligations.empty() &&
           std::all_of(obligations.begin(), obligations.end(), [](const Obligation& o) { return o.pass; });
}

const Obligation& Certificate::get(const std::string& name) const {
    for (const auto& o : obligations)
        if (o.name == name) return o;
    throw std::out_of_range("no obligation named " + name);
}

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["overall"] = pass() ? "PASS" : "FAIL";
    j["tiles"] = tiles;
    j["tetrads"] = tetrads;
    j["max_window_side"] = max_side;
    nlohmann::ordered_json obs = nlohmann::ordered_json::array();
    for (const auto& o : obligations) {
        nlohmann::ordered_json e;
        e["name"] = o.name;
        e["status"] = o.pass ? "PASS" : "FAIL";
        e["detail"] = o.detail;
        if (o.at) e["at"] = {(*o.at)[0], (*o.at)[1]};
        else e["at"] = nullptr;
        obs.push_back(std::move(e));
    }
    j["obligations"] = std::move(obs);
    return j.dump(2);
}

SpecialTileSets SpecialTileSets::reference() {
    SpecialTileSets s;
    s.zero_tile = 5;
    s.S = {1, 2, 6, 7, 12, 13, 20, 29};
    s.S_prime = s.S;
    s.S_prime.insert(5);
    return s;
}

int zeroth_cell_row(const TilingSystem& sys) { return sys.offset() + sys.pitch(); }

SpecialTileSets scan_special_tiles(const Coding& tau, int max_side) {
    SpecialTileSets out;
    const int n = static_cast<int>(tau.images.size());
    for (int i = 0; i < n; ++i) {
        const int tile = tau.base + i;
        const auto& img = tau.images[static_cast<std::size_t>(i)];
        if (zero_squares(img, tau.l, max_side + 1).empty()) continue;
        out.S_prime.insert(tile);
        if (std::all_of(img.begin(), img.end(), [](std::uint8_t v) { return v == 0; })) {
            if (out.zero_tile != 0) throw DomainError("coding has two all-zero images");
            out.zero_tile = tile;
        } else {
            out.S.insert(tile);
        }
    }
    return out;
}

Obligation verify_coding_structure(const TilingSystem& sys, const SpecialTileSets& sets, int max_side) {
    Obligation o = make("coding-zero-structure");
    const Coding& tau = sys.tau;
    const int l = tau.l, z = zeroth_cell_row(sys);
    const SpecialTileSets found = scan_special_tiles(tau, max_side);
    if (found.S_prime != sets.S_prime)
        fail(o, "tiles with a zero " + std::to_string(max_side + 1) + "-square are " + set_text(found.S_prime) +
                    ", expected " + set_text(sets.S_prime));
    if (sets.zero_tile == 0 || !sets.S_prime.count(sets.zero_tile)) {
        fail(o, "no zero tile");
        return o;
    }
    const auto& zimg = tau.image(sets.zero_tile);
    for (int s = 1; s <= l; ++s)
        for (int t = 1; t <= l; ++t)
            if (zimg[static_cast<std::size_t>((s - 1) * l + (t - 1))] != 0)
                fail(o, "image of the zero tile " + std::to_string(sets.zero_tile) + " is nonzero at cell (" +
                            std::to_string(s) + ", " + std::to_string(t) + ")",
                     std::array<std::int64_t, 2>{sets.zero_tile, s});
    if (z < 2 || z > l) {
        fail(o, "zeroth cell row " + std::to_string(z) + " lies outside the image");
        return o;
    }
    for (int tile : sets.S) {
        for (int s = 1; s <= z - 2; ++s)
            for (int t = 1; t <= l; ++t)
                if (tau.at(tile, s, t) != 0)
                    fail(o, "tile " + std::to_string(tile) + " is nonzero in row " + std::to_string(s),
                         std::array<std::int64_t, 2>{tile, s});
        for (int t = 1; t <= l; ++t)
            if (tau.at(tile, z - 1, t) != 1)
                fail(o, "tile " + std::to_string(tile) + " has a non-one entry in row " + std::to_string(z - 1),
                     std::array<std::int64_t, 2>{tile, z - 1});
        for (const auto& [s, t] : zero_squares(tau.image(tile), l, max_side + 1))
            if (s + max_side > z - 2)
                fail(o, "tile " + std::to_string(tile) + " has a zero square reaching row " +
                            std::to_string(s + max_side),
                     std::array<std::int64_t, 2>{tile, s});
    }
    if (o.pass)
        o.detail = "S' = " + set_text(sets.S_prime) + ", zero tile " + std::to_string(sets.zero_tile) + "; rows 1.." +
                   std::to_string(z - 2) + " zero and row " + std::to_string(z - 1) + " all ones on S";
    return o;
}

Obligation verify_substitution_structure(const Substitution& phi, const SpecialTileSets& sets) {
    Obligation o = make("substitution-structure");
    const int k = phi.k, Z = sets.zero_tile;
    if (!phi.has(Z)) {
        fail(o, "zero tile missing from the substitution");
        return o;
    }
    for (int v : phi.image(Z))
        if (v != Z) fail(o, "image of the zero tile contains tile " + std::to_string(v), std::array<std::int64_t, 2>{Z, v});
    for (int s : sets.S) {
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b) {
                const int v = phi.at(s, a, b);
                if (a < k && v != Z)
                    fail(o, "tile " + std::to_string(s) + " has tile " + std::to_string(v) + " above its bottom row",
                         std::array<std::int64_t, 2>{s, a});
                if (a == k && !sets.S.count(v))
                    fail(o, "tile " + std::to_string(s) + " has tile " + std::to_string(v) + " outside S in its bottom row",
                         std::array<std::int64_t, 2>{s, b});
            }
    }
    for (int s = phi.base; s < phi.base + phi.size(); ++s) {
        if (sets.S_prime.count(s)) continue;
        for (int v : phi.image(s))
            if (sets.S_prime.count(v))
                fail(o, "tile " + std::to_string(s) + " outside S' has tile " + std::to_string(v) + " in its image",
                     std::array<std::int64_t, 2>{s, v});
    }
    if (o.pass) o.detail = "checked all " + std::to_string(phi.size()) + " images";
    return o;
}

Obligation verify_row_structure(const TilingSystem& sys, const SpecialTileSets& sets, const Region& tiles) {
    Obligation o = make("row-structure");
    for (int orth = 0; orth < 4; ++orth) {
        const auto seed = sys.seeds[static_cast<std::size_t>(orth)];
        if (!seed) continue;
        const bool top = orth < 2;
        if (top && !sets.S.count(*seed))
            fail(o, "seed of orthant " + std::to_string(orth) + " is not in S", std::array<std::int64_t, 2>{orth, *seed});
        if (!top && sets.S_prime.count(*seed))
            fail(o, "seed of orthant " + std::to_string(orth) + " is in S'", std::array<std::int64_t, 2>{orth, *seed});
    }
    const TileGrid t = expand(sys, tiles);
    for (std::int64_t i = tiles.m_lo; i <= tiles.m_hi; ++i)
        for (std::int64_t j = tiles.n_lo; j <= tiles.n_hi; ++j) {
            const int v = t(i, j);
            if (i <= -1 && v != sets.zero_tile)
                fail(o, "tile " + std::to_string(v) + " in a negative row", std::array<std::int64_t, 2>{i, j});
            else if (i == 0 && !sets.S.count(v))
                fail(o, "tile " + std::to_string(v) + " in row 0 is not in S", std::array<std::int64_t, 2>{i, j});
            else if (i >= 1 && sets.S_prime.count(v))
                fail(o, "tile " + std::to_string(v) + " of S' in a positive row", std::array<std::int64_t, 2>{i, j});
        }
    if (o.pass)
        o.detail = "tile rows " + std::to_string(tiles.m_lo) + ".." + std::to_string(tiles.m_hi) + ", columns " +
                   std::to_string(tiles.n_lo) + ".." + std::to_string(tiles.n_hi);
    return o;
}

FrameCheck check_frame_constraints(const ValueGrid& g, const Modulus& mod) {
    const SmallField f(mod);
    FrameCheck out;
    auto flag = [&](std::int64_t m, std::int64_t n, const char* rule) {
        if (!out.ok) return;
        out.ok = false;
        out.first = FrameViolation{m, n, rule};
    };
    const std::int64_t i0 = g.i_lo(), i1 = g.i_hi(), j0 = g.j_lo(), j1 = g.j_hi();

    // Cross identity everywhere it is visible.
    for (std::int64_t m = i0 + 1; m < i1; ++m)
        for (std::int64_t n = j0 + 1; n < j1; ++n) {
            const int c = g(m, n);
            const int lhs = f.mul(c, c);
            const int rhs = f.add(f.mul(g(m - 1, n), g(m + 1, n)), f.mul(g(m, n - 1), g(m, n + 1)));
            ++out.entries_checked;
            if (lhs != rhs) flag(m, n, "cross identity");
        }

    // Zero components.
    Grid<std::uint8_t> seen(i0, i1, j0, j1, 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> stack;
    for (std::int64_t m = i0; m <= i1; ++m)
        for (std::int64_t n = j0; n <= j1; ++n) {
            if (g(m, n) != 0 || seen(m, n)) continue;
            std::int64_t top = m, bot = m, left = n, right = n, size = 0;
            bool border = false;
            stack.assign(1, {m, n});
            seen(m, n) = 1;
            while (!stack.empty()) {
                const auto [a, b] = stack.back();
                stack.pop_back();
                ++size;
                top = std::min(top, a);
                bot = std::max(bot, a);
                left = std::min(left, b);
                right = std::max(right, b);
                if (a == i0 || a == i1 || b == j0 || b == j1) border = true;
                const std::pair<std::int64_t, std::int64_t> nb[4] = {{a - 1, b}, {a + 1, b}, {a, b - 1}, {a, b + 1}};
                for (const auto& [x, y] : nb)
                    if (g.contains(x, y) && g(x, y) == 0 && !seen(x, y)) {
                        seen(x, y) = 1;
                        stack.emplace_back(x, y);
                    }
            }
            if (border) continue;
            const std::int64_t h = bot - top + 1, w = right - left + 1;
            if (h != w || size != h * w) {
                flag(top, left, "zero set is not a square");
                continue;
            }
            // The ring is inside the grid because the component avoids the border.
            bool ring_ok = true;
            for (std::int64_t x = top - 1; x <= bot + 1; ++x)
                for (std::int64_t y = left - 1; y <= right + 1; ++y) {
                    const bool on_ring = x == top - 1 || x == bot + 1 || y == left - 1 || y == right + 1;
                    if (on_ring && g(x, y) == 0) ring_ok = false;
                }
            if (!ring_ok) {
                // diagonal contact with another zero: a corner of the inner frame is zero
                flag(top, left, "inner frame contains a zero");
                continue;
            }
            ++out.windows_checked;
            const std::int64_t d = h + 1;  // deficiency
            const int sgn = (d - 1) % 2 == 0 ? 1 : f.neg(1);
            auto A = [&](std::int64_t k) { return static_cast<int>(g(top - 1, left - 1 + k)); };
            auto B = [&](std::int64_t k) { return static_cast<int>(g(top - 1 + k, left - 1)); };
            auto C = [&](std::int64_t k) { return static_cast<int>(g(bot + 1 - k, right + 1)); };
            auto D = [&](std::int64_t k) { return static_cast<int>(g(bot + 1, right + 1 - k)); };
            const int P = f.div(A(1), A(0)), Q = f.div(B(1), B(0)), R = f.div(C(1), C(0)), S = f.div(D(1), D(0));
            for (std::int64_t k = 1; k <= d; ++k) {
                if (A(k) != f.mul(A(k - 1), P)) flag(top - 1, left - 1 + k, "top frame not geometric");
                if (B(k) != f.mul(B(k - 1), Q)) flag(top - 1 + k, left - 1, "left frame not geometric");
                if (C(k) != f.mul(C(k - 1), R)) flag(bot + 1 - k, right + 1, "right frame not geometric");
                if (D(k) != f.mul(D(k - 1), S)) flag(bot + 1, right + 1 - k, "bottom frame not geometric");
            }
            if (f.mul(P, S) != f.mul(sgn, f.mul(Q, R))) flag(top, left, "ratio law PS/QR");
            int sgn_k = 1;
            for (std::int64_t k = 0; k <= d; ++k) {
                if (f.mul(A(k), D(k)) != f.mul(sgn_k, f.mul(B(k), C(k))))
                    flag(bot + 1, right + 1 - k, "corner law A_k D_k / B_k C_k");
                sgn_k = f.mul(sgn_k, sgn);
            }
            if (top - 2 < i0 || bot + 2 > i1 || left - 2 < j0 || right + 2 > j1) continue;
            int alt = 1;
            for (std::int64_t k = 0; k <= d; ++k) {
                const int E = g(top - 2, left - 1 + k), F = g(top - 1 + k, left - 2);
                const int G = g(bot + 1 - k, right + 2), H = g(bot + 2, right + 1 - k);
                const int lhs = f.add(f.div(f.mul(Q, E), A(k)), f.mul(alt, f.div(f.mul(P, F), B(k))));
                const int rhs = f.add(f.div(f.mul(R, H), D(k)), f.mul(alt, f.div(f.mul(S, G), C(k))));
                if (lhs != rhs) flag(bot + 2, right + 1 - k, "outer frame law");
                alt = f.neg(alt);
            }
        }
    return out;
}

Obligation verify_frame_constraints(const TilingSystem& sys, const std::vector<std::array<int, 4>>& tetrads,
                                    const Modulus& mod, const Region& values, int max_side) {
    Obligation o = make("frame-constraints");
    const std::int64_t cover = cover_size(sys.tau.l, sys.overlap, 2 * max_side + 1);
    if (cover > 2)
        fail(o, "frame patterns of side " + std::to_string(2 * max_side + 1) + " need " + std::to_string(cover) +
                    "-patterns of tiles, more than the tetrads provide");
    const ValueGrid decoded = decode(sys, values);
    const FrameCheck region = check_frame_constraints(decoded, mod);
    if (!region.ok)
        fail(o, "decoded region: " + region.first->rule,
             std::array<std::int64_t, 2>{region.first->m, region.first->n});
    std::int64_t windows = 0;
    for (std::size_t i = 0; i < tetrads.size() && o.pass; ++i) {
        const auto& q = tetrads[i];
        TileGrid pat(1, 2, 1, 2);
        pat(1, 1) = q[0];
        pat(1, 2) = q[1];
        pat(2, 1) = q[2];
        pat(2, 2) = q[3];
        const FrameCheck c = check_frame_constraints(decode_pattern(sys, pat), mod);
        windows += c.windows_checked;
        if (!c.ok)
            fail(o, "tetrad " + std::to_string(i + 1) + ": " + c.first->rule + " at cell (" +
                        std::to_string(c.first->m) + ", " + std::to_string(c.first->n) + ")",
                 std::array<std::int64_t, 2>{c.first->m, c.first->n});
    }
    if (o.pass) {
        std::ostringstream s;
        s << "decoded region rows " << values.m_lo << ".." << values.m_hi << " cols " << values.n_lo << ".."
          << values.n_hi << ": " << region.entries_checked << " entries, " << region.windows_checked
          << " windows; " << tetrads.size() << " tetrad images: " << windows << " windows";
        o.detail = s.str();
    }
    return o;
}

Obligation verify_bounded_deficiency(const ValueGrid& decoded, const Modulus& mod, int max_side, bool structure_ok,
                                     std::int64_t cover) {
    Obligation o = make("bounded-deficiency");
    if (!structure_ok) fail(o, "structure obligations failed, so zero squares are not confined to negative rows");
    if (cover != 1)
        fail(o, "a zero " + std::to_string(max_side + 1) + "-square spans " + std::to_string(cover) +
                    " coded tiles per axis; the confinement argument needs 1");
    WallSegment w(mod, decoded.i_lo(), decoded.i_hi(), decoded.j_lo(), decoded.j_hi());
    for (std::int64_t m = decoded.i_lo(); m <= decoded.i_hi(); ++m)
        for (std::int64_t n = decoded.j_lo(); n <= decoded.j_hi(); ++n) w.set(m, n, decoded(m, n));
    const Region rows{std::max<std::int64_t>(0, decoded.i_lo()), decoded.i_hi(), decoded.j_lo(), decoded.j_hi()};
    const Census c = census(w, rows);
    std::int64_t max_seen = 0;
    for (const auto& win : c.windows) {
        if (win.side > max_side)
            fail(o, "window of side " + std::to_string(win.side) + (win.broken ? " (visible part)" : ""),
                 std::array<std::int64_t, 2>{win.m, win.n});
        if (!win.broken) max_seen = std::max(max_seen, win.side);
    }
    if (o.pass && max_seen != max_side)
        fail(o, "largest window in the checked region has side " + std::to_string(max_seen) + ", expected " +
                    std::to_string(max_side));
    if (o.pass)
        o.detail = "largest window side " + std::to_string(max_seen) + " over " + std::to_string(c.windows.size()) +
                   " windows; no zero " + std::to_string(max_side + 1) + "-square in rows >= 0";
    return o;
}

Obligation verify_zeroth_row(const TilingSystem& sys, const SpecialTileSets& sets, const SequenceSource& source,
                             const ZerothRowOptions& opts) {
    Obligation o = make("zeroth-row");
    const std::int64_t W = opts.compare_width;
    std::int64_t lo = -W, hi = W;
    if (source.bounded()) {
        lo = std::max(lo, source.lo());
        hi = std::min(hi, source.hi());
    }
    const ValueGrid row = decode(sys, {0, 0, lo, hi});
    for (std::int64_t n = lo; n <= hi; ++n)
        if (row(0, n) != source.residue(n)) {
            fail(o, "row 0 differs from " + source.name() + " at column " + std::to_string(n),
                 std::array<std::int64_t, 2>{0, n});
            break;
        }
    if (opts.paper_folding_tables) {
        const Coding& tau = sys.tau;
        const int z = zeroth_cell_row(sys), k = sys.phi.k, off = sys.offset(), c = sys.pitch();
        std::vector<int> coded(sets.S.begin(), sets.S.end());
        std::sort(coded.begin(), coded.end(), [&](int a, int b) {
            return coding_row(tau, a, z, 1, tau.l) < coding_row(tau, b, z, 1, tau.l);
        });
        auto code_of = [&](int tile) {
            const auto it = std::find(coded.begin(), coded.end(), tile);
            return it == coded.end() ? -1 : static_cast<int>(it - coded.begin());
        };
        static const std::vector<int> expected_tiles{2, 13, 7, 12, 20, 6, 1, 29};
        static const std::vector<std::array<int, 2>> expected_phi{{0, 2}, {0, 3}, {1, 6}, {1, 7},
                                                                   {4, 2}, {4, 3}, {5, 6}, {5, 7}};
        static const std::vector<std::string> expected_rows{
            "1100010011000", "1100010011100", "1100011011000", "1100011011100",
            "1110010011000", "1110010011100", "1110011011000", "1110011011100"};
        if (coded != expected_tiles) fail(o, "zeroth-row tiles in coding order differ from the reference table");
        std::vector<std::array<int, 2>> phi_row;
        for (std::size_t a = 0; a < coded.size() && o.pass; ++a) {
            const int s1 = code_of(sys.phi.at(coded[a], k, 1)), s2 = code_of(sys.phi.at(coded[a], k, 2));
            phi_row.push_back({s1, s2});
            if (a < expected_phi.size() && phi_row.back() != expected_phi[a])
                fail(o, "row substitution of coded tile " + std::to_string(a) + " differs from the table",
                     std::array<std::int64_t, 2>{static_cast<std::int64_t>(a), coded[a]});
            if (a < expected_rows.size() && coding_row(tau, coded[a], z, 1, tau.l) != expected_rows[a])
                fail(o, "coding row of coded tile " + std::to_string(a) + " differs from the table",
                     std::array<std::int64_t, 2>{static_cast<std::int64_t>(a), coded[a]});
        }
        auto boxed = [&](int code) { return coding_row(tau, coded[static_cast<std::size_t>(code)], z, off + 1, off + c); };
        if (o.pass && coded.size() == 8) {
            for (int a = 4; a < 8; ++a) {
                const auto& img = phi_row[static_cast<std::size_t>(a)];
                const auto& base = phi_row[static_cast<std::size_t>(a - 4)];
                if (img[0] % 4 != base[0] % 4 || img[1] % 4 != base[1] % 4 || boxed(a) != boxed(a - 4))
                    fail(o, "coded tile " + std::to_string(a) + " is not interchangeable with " + std::to_string(a - 4),
                         std::array<std::int64_t, 2>{a, a - 4});
            }
            const SubstSystem1D psi = paper_folding_system();
            const SubstSystem1D psi4 = substitution_power(psi, 4);
            for (int s = 0; s < 4 && o.pass; ++s) {
                const auto& img = phi_row[static_cast<std::size_t>(s)];
                const std::string lhs = boxed(img[0]) + boxed(img[1]);
                std::string rhs;
                for (int letter : psi4.images[static_cast<std::size_t>(s)])
                    rhs += static_cast<char>('0' + psi.coding[static_cast<std::size_t>(letter)]);
                if (lhs != rhs)
                    fail(o, "tau'(phi(" + std::to_string(s) + ")) = " + lhs + " but rho(psi^4) = " + rhs,
                         std::array<std::int64_t, 2>{s, 0});
            }
            const int left = code_of(sys.seeds[0].value_or(0)), right = code_of(sys.seeds[1].value_or(0));
            if (left < 0 || right < 0 || left % 4 != psi.left_seed || right % 4 != psi.right_seed)
                fail(o, "row seeds do not reduce to the paper-folding seeds");
            if (expand_1d_letters(psi4, -opts.psi_width, opts.psi_width) !=
                expand_1d_letters(psi, -opts.psi_width, opts.psi_width))
                fail(o, "psi^4 and psi generate different letters");
        } else if (o.pass) {
            fail(o, "expected eight zeroth-row tiles, found " + std::to_string(coded.size()));
        }
    }
    if (o.pass) {
        o.detail = "row 0 equals " + source.name() + " on columns " + std::to_string(lo) + ".." + std::to_string(hi);
        if (opts.paper_folding_tables)
            o.detail += "; eight-tile row system matches the reference table and rho(psi^4)";
    }
    return o;
}

PipelineOptions paper_folding_options() {
    PipelineOptions o;
    o.max_side = 3;
    o.expected_sets = SpecialTileSets::reference();
    o.zeroth.paper_folding_tables = true;
    return o;
}

Certificate certify(const DiscoveryResult& res, const SequenceSource& source, const PipelineOptions& opts) {
    const TilingSystem& sys = res.system;
    const Modulus& mod = source.modulus();
    const int G = opts.max_side;
    Certificate cert;
    cert.tiles = res.size();
    cert.tetrads = static_cast<std::int64_t>(res.tetrads.size());
    cert.max_side = G;

    const SpecialTileSets sets = opts.expected_sets ? *opts.expected_sets : scan_special_tiles(sys.tau, G);
    cert.obligations.push_back(verify_coding_structure(sys, sets, G));
    cert.obligations.push_back(verify_substitution_structure(sys.phi, sets));
    cert.obligations.push_back(verify_row_structure(sys, sets, res.parents));

    Obligation cons = make("consistency");
    if (const auto v = check_consistency(sys, res.parents))
        fail(cons, v->describe(), std::array<std::int64_t, 2>{v->i, v->j});
    else
        cons.detail = std::to_string(sys.overlap) + "-consistent on tile rows " + std::to_string(res.parents.m_lo) +
                      ".." + std::to_string(res.parents.m_hi) + ", columns " + std::to_string(res.parents.n_lo) +
                      ".." + std::to_string(res.parents.n_hi);
    cert.obligations.push_back(cons);

    Obligation clo = make("closure");
    {
        std::ostringstream s;
        s << "m=(" << res.closure_m[0] << "," << res.closure_m[1] << ") M=(" << res.closure_M[0] << ","
          << res.closure_M[1] << "): " << res.closure.small_patterns << " 2-patterns, " << res.closure.large_patterns
          << " on the k-fold region";
        if (res.closure_growth > 0)
            s << "; the wall-derived pair held " << res.base_closure.small_patterns << " of "
              << res.base_closure.large_patterns << " and was scaled by k " << res.closure_growth << " time(s)";
        clo.detail = s.str();
    }
    if (!res.closure.ok) {
        const auto at = res.closure.missing_at.value_or(std::pair<std::int64_t, std::int64_t>{0, 0});
        clo.pass = false;
        clo.at = std::array<std::int64_t, 2>{at.first, at.second};
    }
    cert.obligations.push_back(clo);

    cert.obligations.push_back(verify_frame_constraints(sys, res.tetrads, mod, opts.checked_values, G));

    const bool structure_ok = cert.obligations[0].pass && cert.obligations[1].pass && cert.obligations[2].pass;
    const ValueGrid decoded = decode(sys, opts.checked_values);
    cert.obligations.push_back(
        verify_bounded_deficiency(decoded, mod, G, structure_ok, cover_size(sys.tau.l, sys.overlap, G + 1)));

    cert.obligations.push_back(verify_zeroth_row(sys, sets, source, opts.zeroth));
    return cert;
}

Certificate full_pipeline(const SequenceSource& source, const DiscoveryParams& params, const PipelineOptions& opts,
                          DiscoveryResult* result) {
    const WallSegment wall = build_discovery_wall(source, params, opts.threads);
    DiscoveryResult res = discover(wall, params);
    Certificate cert = certify(res, source, opts);
    if (result) *result = std::move(res);
    return cert;
}

}  // namespace nwall
