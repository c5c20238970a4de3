#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "numberwall/tiling.hpp"
#include "numberwall/wall.hpp"

namespace nwall {

struct DiscoveryParams {
    int k = 2;
    int tel = 12;  // tile edge length l - 1
    int cid = 8;   // centre distance l - r
    std::int64_t a = -55, b = 2400, c = -5220, d = 5220;
    Centering centering = Centering::Centered;
    int max_closure_growth = 3;  // how often pass 3 may multiply (m, M] by k

    int l() const { return tel + 1; }
    int r() const { return tel - cid + 1; }
    /// Throws DomainError when k, tel, cid or the padding of a violate their constraints.
    void validate() const;
    /// Most negative admissible a: -(5/2)(cid + tel), rounded away from zero.
    std::int64_t padding_bound() const;
};

/** Discovery failed: a pass found a contradiction or the closure was not reached. */
class DiscoveryFailure : public std::runtime_error {
public:
    DiscoveryFailure(std::string pass, std::string msg, std::int64_t i, std::int64_t j)
        : std::runtime_error(msg), pass_(std::move(pass)), i_(i), j_(j) {}
    const std::string& pass() const { return pass_; }
    std::int64_t i() const { return i_; }
    std::int64_t j() const { return j_; }

private:
    std::string pass_;
    std::int64_t i_, j_;
};

struct DiscoveryResult {
    DiscoveryParams params;
    TilingSystem system;          // tiles 1..|Sigma| in canonical order
    TileGrid tiles;               // tile lattice read from the wall
    Region parents{};             // parent tiles read in pass 2; also where consistency is checked
    std::array<std::int64_t, 2> closure_m{}, closure_M{};  // the region pair (m, M] and k(m, M]
    std::vector<std::array<int, 4>> tetrads;  // phi images in id order, then the other observed 2-patterns
    std::int64_t pattern_count = 0;           // distinct 2-patterns of T on the closing (m, M]
    ClosureReport base_closure;               // at the pair derived from the wall bounds
    ClosureReport closure;                    // at the pair finally reached
    int closure_growth = 0;                   // times (m, M] was multiplied by k before closing

    int size() const { return system.phi.size(); }
    Region closure_region() const { return {closure_m[0] + 1, closure_M[0], closure_m[1] + 1, closure_M[1]}; }
};

/// Wall rows a..b, columns c..d, plus the margin pass 1 reads around the lattice.
WallSegment build_discovery_wall(const SequenceSource& source, const DiscoveryParams& params, int threads = 0);

/// All three passes plus canonical ordering; throws DiscoveryFailure on contradiction or missing closure.
DiscoveryResult discover(const WallSegment& wall, const DiscoveryParams& params);

/**
 * Reindex tiles 1..|Sigma| by the least occurrence key |m| + |n| + m/(10b) + n/(10bc) of their centres,
 * compared exactly; b and c are the row and column spans of the wall.
 * `perm` receives old id -> new id.
 */
void canonical_order(DiscoveryResult& result, std::vector<int>* perm = nullptr);

/// T(0,0)=1, T(0,1)=2, T(1,0)=3, T(1,1)=4.
bool verify_initial_conditions(const DiscoveryResult& result);

/// Wall row and column of the centre of the coded image of tile (i, j).
std::array<std::int64_t, 2> tile_center(const DiscoveryParams& p, std::int64_t i, std::int64_t j);

void write_codes(std::ostream& out, const Coding& tau);
void write_tetrads(std::ostream& out, const DiscoveryResult& r);
Coding read_codes(std::istream& in);
std::string summary_json(const DiscoveryResult& r);

}  // namespace nwall
