#pragma once

#include <optional>
#include <vector>

#include "czsparse/dyadic.hpp"

namespace czsparse {

// Finite union of half-open grid cells at a fixed resolution level; stands in
// for the open sets of the construction.  Interpreted as the interior of the
// union of the closed cells, so the closed complement is the union of all
// lattice cells NOT in the region (plus everything outside).  Measure,
// membership and distance queries are exact integer arithmetic.
struct Region {
    int dim = 1;
    int grid_level = 0;
    std::vector<Anchor> cells;  // sorted lexicographically, unique

    bool empty() const { return cells.empty(); }
    i64 cell_count() const { return static_cast<i64>(cells.size()); }
    long double measure() const;

    bool contains_cell(const Anchor& a) const;

    // Bounding rectangle in cell units, [lo, hi) per axis; nullopt when empty.
    struct Rect {
        Anchor lo{}, hi{};
    };
    std::optional<Rect> bounding_rect() const;
};

Region make_region(int dim, int grid_level, std::vector<Anchor> cells);

Region region_union(const Region& a, const Region& b);
Region region_intersection(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
bool regions_disjoint(const Region& a, const Region& b);

// Cells of `r` fully contained in `box` (box corners may sit on the half-cell
// lattice one level below the grid).
Region clip_to_box(const Region& r, const GridBox& box);

// All grid cells overlapping `box` belong to r; used for "2 Lambda_d L inside
// Omega" checks.
bool box_inside_region(const GridBox& box, const Region& r);

// Cells of r overlapping the given cube.
std::vector<Anchor> cells_of_cube_in_region(const Region& r, const DyadicCube& q);

struct ComplementDistance {
    i128 dist2 = 0;     // squared Euclidean distance, in units 4^unit_level
    int unit_level = 0;
    bool omega_empty = false;
};

// Exact squared distance from a grid-aligned box to the closed complement of
// the region.  Zero iff the box touches the complement.  The box may live on
// a lattice finer than the grid; results are reported in units of
// 4^min(box.level, grid_level).
ComplementDistance dist2_to_complement(const Region& r, const GridBox& box);
ComplementDistance dist2_to_complement(const Region& r, const DyadicCube& q);

// Precomputed index for repeated distance / containment queries.
class RegionIndex {
  public:
    explicit RegionIndex(const Region& r);

    const Region& region() const { return *region_; }
    bool contains_cell(const Anchor& a) const;
    // every cell of [lo, hi) (cell units) present?
    bool rect_full(const Anchor& lo, const Anchor& hi) const;
    // any cell of [lo, hi) present?
    bool rect_meets(const Anchor& lo, const Anchor& hi) const;

    // Core distance routine: box given in units 2^u, u <= grid_level,
    // cell_scale = 2^(grid_level - u).
    i128 dist2_box(const Anchor& blo, const Anchor& bhi, i64 cell_scale) const;

    // dist2_box(...) >= threshold, with early exit in both directions.
    bool dist2_box_at_least(const Anchor& blo, const Anchor& bhi, i64 cell_scale,
                            i128 threshold) const;

  private:
    const Region* region_;
    // d == 1: merged intervals; d == 2: per-row merged column intervals.
    std::vector<std::pair<i64, i64>> intervals_;
    std::vector<i64> rows_;
    std::vector<std::vector<std::pair<i64, i64>>> row_intervals_;
    Region::Rect bbox_{};

    bool row_full(i64 row, i64 c0, i64 c1) const;
    bool row_meets(i64 row, i64 c0, i64 c1) const;
};

}  // namespace czsparse
