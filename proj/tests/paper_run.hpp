// The F_3 paper-folding discovery at the default parameters, computed once per test binary.
#pragma once

#include <memory>

#include "numberwall/discovery.hpp"
#include "numberwall/sequences.hpp"

namespace fixture {

struct PaperRun {
    nwall::SequenceSource source = nwall::SequenceSource::paper_folding(nwall::Modulus(3));
    nwall::DiscoveryParams params{};
    nwall::WallSegment wall;
    nwall::DiscoveryResult result;

    PaperRun() : wall(nwall::build_discovery_wall(source, params)), result(nwall::discover(wall, params)) {}
};

inline const PaperRun& paper_run() {
    static const std::unique_ptr<PaperRun> run = std::make_unique<PaperRun>();
    return *run;
}

// Rows of the tile grid printed for tile rows -1..10 and columns -10..11.
inline constexpr int kGridRows = 12, kGridCols = 22;
inline constexpr int kTileGrid[kGridRows][kGridCols] = {
    {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
    {12, 6, 29, 20, 7, 13, 29, 20, 12, 6, 1, 2, 7, 13, 1, 2, 12, 6, 1, 2, 7, 13},
    {41, 96, 80, 65, 52, 40, 30, 21, 14, 8, 3, 4, 9, 15, 22, 31, 41, 8, 3, 4, 9, 40},
    {134, 114, 97, 81, 66, 53, 42, 32, 23, 16, 10, 11, 17, 24, 33, 43, 54, 67, 10, 11, 115, 135},
    {156, 136, 116, 98, 82, 68, 55, 44, 34, 25, 18, 19, 26, 35, 45, 56, 69, 83, 99, 117, 137, 157},
    {179, 158, 138, 118, 100, 84, 70, 57, 46, 36, 27, 28, 37, 47, 58, 71, 85, 101, 119, 139, 159, 180},
    {204, 181, 160, 140, 120, 102, 86, 72, 59, 48, 38, 39, 49, 60, 73, 87, 103, 121, 141, 161, 182, 205},
    {230, 206, 183, 162, 142, 122, 104, 88, 74, 61, 50, 51, 62, 75, 89, 105, 123, 143, 163, 184, 207, 231},
    {256, 232, 208, 185, 164, 144, 124, 106, 90, 76, 63, 64, 77, 91, 107, 125, 145, 165, 186, 209, 233, 257},
    {70, 258, 234, 210, 105, 166, 146, 126, 108, 92, 78, 79, 93, 109, 127, 147, 167, 187, 211, 235, 259, 283},
    {86, 72, 260, 236, 212, 188, 168, 148, 128, 110, 94, 95, 111, 129, 149, 169, 189, 213, 237, 261, 284, 308},
    {104, 88, 285, 262, 238, 214, 190, 170, 150, 130, 112, 113, 131, 151, 171, 191, 215, 239, 263, 286, 309, 337},
};
inline constexpr int kGridRow0 = -1, kGridCol0 = -10;

}  // namespace fixture
