#pragma once

#include <vector>

#include "czsparse/region.hpp"

namespace czsparse {

// Whitney decomposition of a region with a level floor.  Emitted cubes are
// the maximal dyadic cubes L (level >= s_floor) satisfying the exact distance
// test dist(L, Omega^c) >= (C_W - sqrt(d)) * side(L); together with the
// floor-level frontier they tile the region exactly.  Every emitted cube then
// satisfies
//     (C_W - sqrt(d)) side(L) <= dist(L, Omega^c) <= 2 C_W side(L)
// (the upper bound because the parent fails the test), and 2 Lambda_d L is
// contained in Omega whenever C_W > sqrt(d)(2 Lambda_d + 1).
struct WhitneyCover {
    Region region;
    ScaleConstants constants;
    std::vector<DyadicCube> cubes;     // sorted by (level, anchor)
    std::vector<DyadicCube> frontier;  // floor-level cubes, sorted
    int s_floor = 0;

    // Exact cell counts in units of 4^min(s_floor, grid_level).
    i128 covered_units() const;
};

// s_floor must not exceed the region's grid level: frontier cubes have to
// refine the grid so that coverage stays exact.
WhitneyCover whitney_decompose(const Region& omega, const ScaleConstants& sc, int s_floor);

// Exact certification of the cover.  All comparisons are integer /
// sqrt-compare arithmetic; nothing here reuses the construction path.
struct CoverCheck {
    bool lower_bound_ok = true;   // (C_W - sqrt d)^2 l^2 <= dist^2
    bool upper_bound_ok = true;   // dist^2 <= 4 C_W^2 l^2
    bool dilation_ok = true;      // 2 Lambda_d L inside Omega
    bool disjoint_ok = true;
    bool coverage_ok = true;      // sum of measures equals |Omega|
    bool frontier_ok = true;      // frontier cubes lie in Omega, near its boundary
    int n_cmp = 0;                // max level gap among cubes with meeting dilations
    i64 checked = 0;
    bool all_ok() const {
        return lower_bound_ok && upper_bound_ok && dilation_ok && disjoint_ok && coverage_ok &&
               frontier_ok;
    }
};

CoverCheck verify_cover(const WhitneyCover& cover, bool measure_comparability = true);

}  // namespace czsparse
