#pragma once

#include <cstdint>
#include <vector>

#include "czsparse/grid_function.hpp"

namespace czsparse {

// f = g + sum_j b_j adapted to a pairwise disjoint cube family:
//   b_j = (f - <f>_{L_j}) 1_{L_j},   g = f off the family, <f>_{L_j} on L_j.
// Atoms are stored on their own cube windows so the mean-zero identity holds
// over the full cube even where it leaves f's window.
struct CZAtom {
    DyadicCube cube;
    GridFunction values;
};

struct CZReport {
    double lambda = 0.0;
    double good_sup = 0.0;                  // ||g||_inf
    double good_sup_over_lambda = 0.0;      // measured Lemma-style ratio
    long double bad_l1_total = 0.0L;        // sum_j ||b_j||_1
    double bad_l1_over_f_l1 = 0.0;
    double probe_max_over_lambda = 0.0;     // max <|b|>_R / lambda over probe cubes
    long double max_atom_mean_abs = 0.0L;   // max_j |integral of b_j|
    long double reconstruction_max_err = 0.0L;
    int probes = 0;
};

struct CZDecomposition {
    GridFunction good;
    std::vector<CZAtom> atoms;
    double lambda = 0.0;
    CZReport report;
};

// Family must be pairwise disjoint and no finer than the grid.
CZDecomposition cz_decompose(const GridFunction& f, const std::vector<DyadicCube>& family,
                             double lambda, std::uint64_t probe_seed = 0x5eedULL);

}  // namespace czsparse
