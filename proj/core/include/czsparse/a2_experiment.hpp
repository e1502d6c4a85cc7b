#pragma once

#include "czsparse/sparse_engine.hpp"

namespace czsparse {

// d=1 power-weight sweep: w_a(x) = |x - 1/2|^a discretized by exact cell
// averages on [0,1), a small battery of test functions, and the measured
// operator ratio of the averaging operator of one fixed certified family.
struct A2Config {
    int grid_level = -10;
    double eta0 = 0.5;
    double c0 = 8.0;  // low start; escalation certifies the family
    std::uint64_t seed = 1;
    double delta = 0.1;  // exponents range over (-1+delta, 1-delta)
};

struct A2Point {
    double exponent = 0.0;
    double characteristic = 0.0;  // sup over lattice cubes of <w><1/w>
    double ratio = 0.0;           // max over the battery of |A f|_w / |f|_w
};

struct A2Result {
    std::vector<A2Point> points;
    double loglog_slope = 0.0;
    size_t family_entries = 0;
    double family_eta_certified = 0.0;
};

// Exact cell averages of |x - x0|^a; x0 = center_cell2 * 2^(grid_level-1).
GridFunction power_weight(int grid_level, const GridBox& win, double exponent, i64 center_cell2);

double discrete_a2_characteristic(const GridFunction& w, const GridFunction& w_inv);

A2Result run_a2_sweep(const A2Config& cfg);

}  // namespace czsparse
