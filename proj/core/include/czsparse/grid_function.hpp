#pragma once

#include <memory>
#include <vector>

#include "czsparse/region.hpp"

namespace czsparse {

// Piecewise-constant function on the grid, stored densely over a square
// window of cells; zero outside the window.  Input data for the construction
// is nonnegative (checked where required); decomposition atoms are signed.
// Immutable after construction; averages go through cached long-double
// prefix sums.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(int dim, int grid_level, const GridBox& window, std::vector<double> values);

    int dim() const { return dim_; }
    int grid_level() const { return grid_level_; }
    const GridBox& window() const { return window_; }
    const std::vector<double>& values() const { return values_; }

    double value_at(const Anchor& cell) const;
    double cell_value(i64 flat_index) const { return values_[flat_index]; }

    long double cell_measure() const;  // 2^(d * grid_level)
    long double integral() const;      // Neumaier-compensated
    long double norm_l1() const;       // integral of |f|
    double norm_sup() const;           // max |value|
    bool is_zero() const;
    bool nonnegative() const;

    // Sum of values over the cell rectangle [lo, hi), exact prefix queries.
    long double cell_sum(const Anchor& lo, const Anchor& hi) const;

    // f * 1_Q and f * 1_B (window unchanged, values masked).
    GridFunction restrict_to_cube(const DyadicCube& q) const;
    GridFunction restrict_to_box(const GridBox& b) const;

    bool nonzero_on_cube(const DyadicCube& q) const;

    // Same function on the half-level grid (each cell split into 2^d).
    GridFunction refine_once() const;

    i64 flat(const Anchor& cell) const;
    Anchor unflat(i64 index) const;
    i64 num_cells() const { return static_cast<i64>(values_.size()); }

  private:
    int dim_ = 1;
    int grid_level_ = 0;
    GridBox window_{};
    std::vector<double> values_;
    mutable std::shared_ptr<const std::vector<long double>> prefix_;  // built on first use

    const std::vector<long double>& prefix() const;
};

// <f>_B: exact cell sums divided by the full box measure (zero outside the
// window counts as zero mass).  Rejects boxes of zero measure or boxes finer
// than the grid.
long double average(const GridFunction& f, const GridBox& box);
long double average(const GridFunction& f, const DyadicCube& q);

// Window covering `box`, clipped to nothing (the box itself as cells).
GridBox cell_window_of_box(const GridBox& box, int grid_level);

}  // namespace czsparse
