#include "numberwall/discovery.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "numberwall/intmath.hpp"

namespace nwall {

void DiscoveryParams::validate() const {
    if (k < 2) throw DomainError("discovery needs k >= 2");
    if (tel < 2 || tel % 2 != 0) throw DomainError("tile edge length must be even and positive");
    if (cid < 2 || cid % 2 != 0) throw DomainError("centre distance must be even and positive");
    if (cid > tel) throw DomainError("centre distance cannot exceed the tile edge length");
    if (a > padding_bound())
        throw DomainError("top padding too small: need a <= " + std::to_string(padding_bound()));
    if (b <= 0 || c >= 0 || d <= 0) throw DomainError("discovery region must surround the origin");
}

std::int64_t DiscoveryParams::padding_bound() const { return -ceil_div(5 * (cid + tel), 2); }

std::array<std::int64_t, 2> tile_center(const DiscoveryParams& p, std::int64_t i, std::int64_t j) {
    const int off = p.centering == Centering::Centered ? centered_start(p.l(), p.r()) - 1 : 0;
    const std::int64_t half = (p.l() + 1) / 2 - off;
    return {p.cid * (i - 1) + half, p.cid * (j - 1) + half};
}

namespace {

// Exact numerator of |m| + |n| + m/(10B) + n/(10BC) over the common denominator 10BC.
std::int64_t distance_key(std::int64_t m, std::int64_t n, std::int64_t B, std::int64_t C) {
    return (std::abs(m) + std::abs(n)) * 10 * B * C + m * C + n;
}

std::array<int, 4> square_at(const TileGrid& g, std::int64_t i, std::int64_t j) {
    return {g(i, j), g(i, j + 1), g(i + 1, j), g(i + 1, j + 1)};
}

// The k*k block of T whose parent is (i, j).
std::vector<int> children_of(const TileGrid& g, int k, std::int64_t i, std::int64_t j) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k * k));
    for (int s = 1; s <= k; ++s)
        for (int t = 1; t <= k; ++t) out.push_back(g(k * (i - 1) + s, k * (j - 1) + t));
    return out;
}

}  // namespace

void canonical_order(DiscoveryResult& res, std::vector<int>* perm_out) {
    const DiscoveryParams& p = res.params;
    const int n_tiles = res.system.phi.size() > 0 ? res.system.phi.size()
                                                  : static_cast<int>(res.system.tau.images.size());
    const std::int64_t B = p.b - p.a, C = p.d - p.c;
    const std::int64_t none = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> best(static_cast<std::size_t>(n_tiles), none);
    for (std::int64_t i = res.tiles.i_lo(); i <= res.tiles.i_hi(); ++i)
        for (std::int64_t j = res.tiles.j_lo(); j <= res.tiles.j_hi(); ++j) {
            const auto ctr = tile_center(p, i, j);
            auto& slot = best[static_cast<std::size_t>(res.tiles(i, j) - 1)];
            slot = std::min(slot, distance_key(ctr[0], ctr[1], B, C));
        }
    std::vector<int> order(static_cast<std::size_t>(n_tiles));
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < n_tiles; ++t)
        if (best[t] == none) throw DomainError("tile " + std::to_string(t + 1) + " has no occurrence");
    std::sort(order.begin(), order.end(), [&](int x, int y) { return best[x] < best[y]; });

    std::vector<int> perm(static_cast<std::size_t>(n_tiles + 1), 0);  // old id -> new id
    for (int rank = 0; rank < n_tiles; ++rank) perm[order[rank] + 1] = rank + 1;

    TilingSystem& sys = res.system;
    std::vector<std::vector<std::uint8_t>> codes(static_cast<std::size_t>(n_tiles));
    for (int old = 1; old <= n_tiles; ++old) codes[perm[old] - 1] = std::move(sys.tau.images[old - 1]);
    sys.tau.images = std::move(codes);
    if (sys.phi.size() == n_tiles) {
        std::vector<std::vector<int>> imgs(static_cast<std::size_t>(n_tiles));
        for (int old = 1; old <= n_tiles; ++old) {
            auto img = sys.phi.images[old - 1];
            for (int& t : img) t = perm[t];
            imgs[perm[old] - 1] = std::move(img);
        }
        sys.phi.images = std::move(imgs);
    }
    for (auto& s : sys.seeds)
        if (s) s = perm[*s];
    for (auto& t : const_cast<std::vector<int>&>(res.tiles.cells())) t = perm[t];
    for (auto& q : res.tetrads)
        for (int& t : q) t = perm[t];
    if (perm_out) *perm_out = perm;
}

WallSegment build_discovery_wall(const SequenceSource& source, const DiscoveryParams& params, int threads) {
    params.validate();
    BuildOptions bo;
    bo.threads = threads;
    // pass 1 reads whole blocks around the lattice, which can poke past the region bounds
    const std::int64_t margin = static_cast<std::int64_t>(params.cid) * params.k + params.l();
    return build(source, params.b + margin, params.c - margin, params.d + margin, params.a, bo);
}

DiscoveryResult discover(const WallSegment& wall, const DiscoveryParams& params) {
    params.validate();
    const int k = params.k, l = params.l(), r = params.r(), cid = params.cid;
    const int off = params.centering == Centering::Centered ? centered_start(l, r) - 1 : 0;

    DiscoveryResult res;
    res.params = params;
    // Parent region (a+r)/(cid k) < i <= (b-r)/(cid k), likewise for columns.
    const std::int64_t i_lo = floor_div(params.a + r, cid * k) + 1, i_hi = floor_div(params.b - r, cid * k);
    const std::int64_t j_lo = floor_div(params.c + r, cid * k) + 1, j_hi = floor_div(params.d - r, cid * k);
    if (i_lo > 0 || i_hi < 1 || j_lo > 0 || j_hi < 1)
        throw DiscoveryFailure("pass2", "parent region does not surround the origin", i_lo, j_lo);
    res.closure_m = {i_lo - 1, j_lo - 1};
    res.closure_M = {i_hi, j_hi};
    res.parents = {i_lo, i_hi, j_lo, j_hi};

    // Pass 1: the coding, read off the child lattice k(m, M].
    const Region lattice{k * res.closure_m[0] + 1, k * res.closure_M[0], k * res.closure_m[1] + 1,
                         k * res.closure_M[1]};
    res.tiles = TileGrid(lattice.m_lo, lattice.m_hi, lattice.n_lo, lattice.n_hi);
    std::unordered_map<std::string, int> ids;
    std::vector<std::vector<std::uint8_t>> codes;
    std::string block(static_cast<std::size_t>(l * l), '\0');
    for (std::int64_t i = lattice.m_lo; i <= lattice.m_hi; ++i)
        for (std::int64_t j = lattice.n_lo; j <= lattice.n_hi; ++j) {
            const std::int64_t m0 = cid * (i - 1) - off, n0 = cid * (j - 1) - off;
            for (int s = 1; s <= l; ++s)
                for (int t = 1; t <= l; ++t) {
                    const auto v = wall.raw(m0 + s, n0 + t);
                    if (v == kUnknown)
                        throw DiscoveryFailure("pass1", "wall segment does not cover the block of tile (" +
                                                            std::to_string(i) + ", " + std::to_string(j) + ")",
                                               i, j);
                    block[static_cast<std::size_t>((s - 1) * l + (t - 1))] = static_cast<char>(v);
                }
            auto [it, fresh] = ids.emplace(block, static_cast<int>(codes.size()) + 1);
            if (fresh) codes.emplace_back(block.begin(), block.end());
            res.tiles(i, j) = it->second;
        }
    const int n_tiles = static_cast<int>(codes.size());

    TilingSystem& sys = res.system;
    sys.tau.l = l;
    sys.tau.base = 1;
    sys.tau.images = std::move(codes);
    sys.overlap = r;
    sys.centering = params.centering;
    sys.phi.k = k;
    sys.phi.base = 1;
    canonical_order(res);

    // Pass 2: each parent tile must always have the same k x k block of children.
    std::vector<std::vector<int>> images(static_cast<std::size_t>(n_tiles));
    for (std::int64_t i = res.closure_m[0] + 1; i <= res.closure_M[0]; ++i)
        for (std::int64_t j = res.closure_m[1] + 1; j <= res.closure_M[1]; ++j) {
            const int parent = res.tiles(i, j);
            auto kids = children_of(res.tiles, k, i, j);
            auto& img = images[static_cast<std::size_t>(parent - 1)];
            if (img.empty()) img = std::move(kids);
            else if (img != kids)
                throw DiscoveryFailure("pass2", "not a " + std::to_string(k) + "-substitution at these parameters: tile " +
                                                    std::to_string(parent) + " has two different images",
                                       i, j);
        }
    for (int t = 1; t <= n_tiles; ++t)
        if (images[t - 1].empty())
            throw DiscoveryFailure("pass3", "closure not reached; enlarge region (tile " + std::to_string(t) +
                                                " never occurs as a parent)", 0, 0);
    sys.phi.images = std::move(images);
    for (std::int64_t i = 0; i <= 1; ++i)
        for (std::int64_t j = 0; j <= 1; ++j) sys.seeds[orthant_of(i, j)] = res.tiles(i, j);
    try {
        sys.validate();
    } catch (const DomainError& e) {
        throw DiscoveryFailure("pass2", e.what(), 0, 0);
    }

    // Pass 3: closure on the regenerated tiling, which must also reproduce the lattice.
    const TileGrid regen = expand(sys, lattice);
    for (std::int64_t i = lattice.m_lo; i <= lattice.m_hi; ++i)
        for (std::int64_t j = lattice.n_lo; j <= lattice.n_hi; ++j)
            if (regen(i, j) != res.tiles(i, j))
                throw DiscoveryFailure("pass3", "substitution does not regenerate the observed tiling", i, j);
    res.base_closure = two_pattern_closure(sys, res.closure_m, res.closure_M);
    res.closure = res.base_closure;
    while (!res.closure.ok && res.closure_growth < params.max_closure_growth) {
        for (int a = 0; a < 2; ++a) {
            res.closure_m[a] *= k;
            res.closure_M[a] *= k;
        }
        ++res.closure_growth;
        res.closure = two_pattern_closure(sys, res.closure_m, res.closure_M);
    }
    if (!res.closure.ok) {
        const auto at = res.closure.missing_at.value_or(std::pair<std::int64_t, std::int64_t>{0, 0});
        throw DiscoveryFailure("pass3", "closure not reached; enlarge region", at.first, at.second);
    }
    res.pattern_count = res.closure.small_patterns;

    // Tetrad table: images first, then the remaining 2-patterns of (m, M] by their nearest occurrence.
    std::set<std::array<int, 4>> listed;
    for (int t = 1; t <= n_tiles; ++t) {
        const auto& img = sys.phi.image(t);
        std::array<int, 4> q{};
        if (k == 2) q = {img[0], img[1], img[2], img[3]};
        res.tetrads.push_back(q);
        listed.insert(q);
    }
    const std::int64_t B = params.b - params.a, C = params.d - params.c;
    std::map<std::array<int, 4>, std::int64_t> extra;
    const TileGrid small = expand(sys, res.closure_region());
    for (std::int64_t i = small.i_lo(); i < small.i_hi(); ++i)
        for (std::int64_t j = small.j_lo(); j < small.j_hi(); ++j) {
            const auto q = square_at(small, i, j);
            if (listed.count(q)) continue;
            const auto ctr = tile_center(params, i, j);
            const std::int64_t key = distance_key(ctr[0], ctr[1], B, C);
            auto [it, fresh] = extra.emplace(q, key);
            if (!fresh) it->second = std::min(it->second, key);
        }
    std::vector<std::pair<std::int64_t, std::array<int, 4>>> rest;
    for (const auto& [q, key] : extra) rest.emplace_back(key, q);
    std::sort(rest.begin(), rest.end());
    for (const auto& [key, q] : rest) res.tetrads.push_back(q);
    return res;
}

bool verify_initial_conditions(const DiscoveryResult& r) {
    const TileGrid& g = r.tiles;
    if (!g.contains(0, 0) || !g.contains(1, 1)) return false;
    return g(0, 0) == 1 && g(0, 1) == 2 && g(1, 0) == 3 && g(1, 1) == 4 && r.system.seeds[0] == 1 &&
           r.system.seeds[1] == 2 && r.system.seeds[2] == 3 && r.system.seeds[3] == 4;
}

void write_codes(std::ostream& out, const Coding& tau) {
    const bool spaced = std::any_of(tau.images.begin(), tau.images.end(), [](const auto& img) {
        return std::any_of(img.begin(), img.end(), [](std::uint8_t v) { return v > 9; });
    });
    for (std::size_t t = 0; t < tau.images.size(); ++t) {
        out << "tile " << (tau.base + static_cast<int>(t)) << "\n";
        for (int s = 0; s < tau.l; ++s) {
            for (int c = 0; c < tau.l; ++c) {
                if (spaced && c) out << ' ';
                out << static_cast<int>(tau.images[t][static_cast<std::size_t>(s * tau.l + c)]);
            }
            out << "\n";
        }
    }
}

Coding read_codes(std::istream& in) {
    Coding tau;
    tau.l = 0;
    std::string word;
    int id;
    while (in >> word >> id) {
        if (word != "tile") throw DomainError("codes file: expected `tile <id>`");
        if (tau.images.empty()) tau.base = id;
        if (id != tau.base + static_cast<int>(tau.images.size())) throw DomainError("codes file: ids not ascending");
        std::string line;
        std::getline(in, line);
        std::vector<std::vector<std::uint8_t>> rows;
        while (std::getline(in, line) && !line.empty()) {
            std::vector<std::uint8_t> row;
            if (line.find(' ') != std::string::npos) {
                std::istringstream ls(line);
                int v;
                while (ls >> v) row.push_back(static_cast<std::uint8_t>(v));
            } else {
                for (char ch : line) row.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
            rows.push_back(std::move(row));
            if (static_cast<int>(rows.size()) == static_cast<int>(rows.front().size())) break;
        }
        if (rows.empty()) throw DomainError("codes file: empty tile");
        const int l = static_cast<int>(rows.size());
        if (tau.l == 0) tau.l = l;
        if (l != tau.l) throw DomainError("codes file: inconsistent tile size");
        std::vector<std::uint8_t> img;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != l) throw DomainError("codes file: ragged tile");
            img.insert(img.end(), row.begin(), row.end());
        }
        tau.images.push_back(std::move(img));
    }
    return tau;
}

void write_tetrads(std::ostream& out, const DiscoveryResult& r) {
    const int n = r.size();
    for (std::size_t i = 0; i < r.tetrads.size(); ++i) {
        const auto& q = r.tetrads[i];
        out << (static_cast<int>(i) < n ? "tile " : "pattern ") << (i + 1) << ": " << q[0] << " " << q[1] << " / "
            << q[2] << " " << q[3] << "\n";
    }
}

std::string summary_json(const DiscoveryResult& r) {
    nlohmann::ordered_json j;
    j["tiles"] = r.size();
    j["tetrads"] = r.tetrads.size();
    j["patterns_in_closure_region"] = r.pattern_count;
    nlohmann::ordered_json seeds;
    for (int o = 0; o < 4; ++o)
        seeds[std::to_string(o >> 1) + "," + std::to_string(o & 1)] = r.system.seeds[o].value_or(0);
    j["seeds"] = seeds;
    j["closure_region"] = {{"m", r.closure_m}, {"M", r.closure_M}, {"growth", r.closure_growth}};
    j["base_closure"] = {{"ok", r.base_closure.ok},
                         {"small_patterns", r.base_closure.small_patterns},
                         {"large_patterns", r.base_closure.large_patterns}};
    j["params"] = {{"k", r.params.k}, {"tel", r.params.tel}, {"cid", r.params.cid}, {"a", r.params.a},
                   {"b", r.params.b},  {"c", r.params.c},     {"d", r.params.d}};
    return j.dump(2);
}

}  // namespace nwall
