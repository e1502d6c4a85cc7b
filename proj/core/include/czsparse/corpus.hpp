#pragma once

#include <cstdint>
#include <string>

#include "czsparse/grid_function.hpp"

namespace czsparse {

// Seeded generators shared by the test suites and the CLI sweeps, so frozen
// corpora are reproducible from (style, seed) alone.

// d=1: union of a few random intervals inside [0, max_extent) cells;
// d=2: union of random rectangles inside [0, side)^2 with side^2 <= max_cells.
Region random_region(int dim, int grid_level, std::uint64_t seed, i64 max_cells);

// styles: "uniform"  iid U(0.05, 1)
//         "spiky"    lognormal cells plus a few heavy clustered bumps
//         "smooth"   squared low-frequency trigonometric blend
GridFunction random_function(int dim, int grid_level, const GridBox& window, std::uint64_t seed,
                             const std::string& style);

}  // namespace czsparse
