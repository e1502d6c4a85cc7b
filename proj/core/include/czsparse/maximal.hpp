#pragma once

#include "czsparse/grid_function.hpp"

namespace czsparse {

// Lattice-cube maximal function: per cell, the best average over grid-aligned
// cubes R with corners on the grid lattice, R inside search_box and R
// containing the cell.  Exhaustive over all lattice sides; the uncentered
// maximal function obeys  Mhat f <= M f <= 3^d Mhat f.
GridFunction lattice_maximal(const GridFunction& f, const GridBox& search_box);

// Cells where mf > threshold (strict).
Region superlevel(const GridFunction& mf, double threshold);

// Equivalent to superlevel(lattice_maximal(f, search_box), threshold) without
// materializing the maximal function; the stopping-time path uses this.
Region superlevel_of_maximal(const GridFunction& f, const GridBox& search_box, double threshold);

}  // namespace czsparse
