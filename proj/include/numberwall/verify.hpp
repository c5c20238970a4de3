#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "numberwall/discovery.hpp"
#include "numberwall/sequences.hpp"
#include "numberwall/tiling.hpp"

namespace nwall {

/** One proof obligation. `at` holds the offending coordinates, when there are any. */
struct Obligation {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<std::array<std::int64_t, 2>> at;
};

struct Certificate {
    std::vector<Obligation> obligations;
    int tiles = 0;
    std::int64_t tetrads = 0;
    std::int64_t max_side = 0;  // the window side bound being certified

    bool pass() const;
    /// Throws std::out_of_range for an unknown name.
    const Obligation& get(const std::string& name) const;
    std::string to_json() const;
};

/** The all-zero tile and the tiles carrying the zeroth row of the wall. */
struct SpecialTileSets {
    int zero_tile = 0;
    std::set<int> S;
    std::set<int> S_prime;  // S plus the zero tile

    /// The sets of the F_3 paper-folding tiling: S = {1,2,6,7,12,13,20,29}, zero tile 5.
    static SpecialTileSets reference();
    bool operator==(const SpecialTileSets&) const = default;
};

/// Cell row of a coded image that lands on wall row 0 for tiles in tile row 0.
int zeroth_cell_row(const TilingSystem& sys);

/// Tiles whose image holds an all-zero (max_side+1)-square; the unique all-zero image is the zero tile.
SpecialTileSets scan_special_tiles(const Coding& tau, int max_side);

/**
 * Zero-block structure of the coding: any tile with an all-zero (G+1)-square lies in S';
 * the zero tile codes to all zeros; each s in S is zero above row z-1, all ones on row z-1
 * (z = zeroth_cell_row), and keeps its zero (G+1)-squares above row z-1.
 */
Obligation verify_coding_structure(const TilingSystem& sys, const SpecialTileSets& sets, int max_side);

/**
 * phi(zero) is all zero tiles; phi(s) for s in S is [zero zero; s1 s2] with s1, s2 in S;
 * a tile whose image meets S' lies in S'.
 */
Obligation verify_substitution_structure(const Substitution& phi, const SpecialTileSets& sets);

/**
 * Tile rows <= -1 hold only the zero tile, row 0 only S, rows >= 1 nothing from S',
 * on the given tile region. Also checks the seeds that start the induction.
 */
Obligation verify_row_structure(const TilingSystem& sys, const SpecialTileSets& sets, const Region& tiles);

struct FrameViolation {
    std::int64_t m = 0, n = 0;
    std::string rule;
};
struct FrameCheck {
    bool ok = true;
    std::optional<FrameViolation> first;
    std::int64_t entries_checked = 0;
    std::int64_t windows_checked = 0;
};

/**
 * Local number-wall laws on a finite grid: the cross identity at every entry with four neighbours,
 * square zero windows with nonzero rings, geometric inner frames with PS/QR = (-1)^(d-1),
 * A_k D_k / (B_k C_k) = (-1)^((d-1)k), and the outer-frame law where the outer ring is visible.
 * Zero components touching the grid border are skipped. Shares no code with the builder.
 */
FrameCheck check_frame_constraints(const ValueGrid& grid, const Modulus& mod);

/**
 * Frame constraints on the decoded tiling over `values`, and on the top-left decoding of every tetrad.
 * The tetrad part covers all of the tiling when the tetrads are closed and cover_size(l, r, 2G+1) <= 2.
 */
Obligation verify_frame_constraints(const TilingSystem& sys, const std::vector<std::array<int, 4>>& tetrads,
                                    const Modulus& mod, const Region& values, int max_side);

/**
 * No all-zero (G+1)-square can reach rows >= 0 (needs cover_size(l, r, G+1) = 1 and the two structure
 * obligations), and the census of the decoded region shows windows of side exactly G.
 */
Obligation verify_bounded_deficiency(const ValueGrid& decoded, const Modulus& mod, int max_side,
                                     bool structure_ok, std::int64_t cover);

struct ZerothRowOptions {
    bool paper_folding_tables = true;    // the eight-tile table and the psi^4 identity
    std::int64_t psi_width = 4096;       // letters each side for the psi^4 fixed-point check
    std::int64_t compare_width = 10000;  // |n| bound for the pointwise comparison
};

/**
 * Row 0 of the decoded tiling against `source`. With the tables enabled, also rebuilds the
 * eight-letter row system (tiles ordered by their zeroth coding row), checks its reference
 * substitution and coding rows, the identification 4..7 -> 0..3, tau'(phi(s)) = rho(psi^4(s)),
 * and that psi^4 and psi generate the same letters.
 */
Obligation verify_zeroth_row(const TilingSystem& sys, const SpecialTileSets& sets, const SequenceSource& source,
                             const ZerothRowOptions& opts);

struct PipelineOptions {
    int max_side = 3;
    Region checked_values{-4, 44, -46, 46};  // value region for the frame and census checks
    std::optional<SpecialTileSets> expected_sets;
    ZerothRowOptions zeroth;
    int threads = 0;  // 0: default_threads()
};

/// Options pinned for the F_3 paper-folding run.
PipelineOptions paper_folding_options();

/// Build, discover, then every obligation. DiscoveryFailure and DomainError propagate.
Certificate full_pipeline(const SequenceSource& source, const DiscoveryParams& params,
                          const PipelineOptions& opts, DiscoveryResult* result = nullptr);
/// Obligations for an already discovered system.
Certificate certify(const DiscoveryResult& res, const SequenceSource& source, const PipelineOptions& opts);

}  // namespace nwall
