#pragma once

#include <vector>

#include "czsparse/grid_function.hpp"

namespace czsparse {

// One certified member of the sparse family: the dilated cube Lambda_d Q, its
// base cube, and the retained major subset E_Q = Q minus the kept stopping
// cubes of the next generation.
struct SparseEntry {
    DyadicCube base;
    GridBox dilated;
    Region major_subset;
    int generation = 0;
    bool leaf = false;      // recursion was cut here (iteration floor)
    int escalations = 0;    // threshold doublings spent at this node
    double c0_used = 0.0;
};

struct SparseFamily {
    ScaleConstants constants;
    double eta0 = 0.5;
    double eta_target = 0.0;     // eta0 / lambda_d^d
    double eta_certified = 0.0;  // min over entries of |E_Q| / |Lambda_d Q|
    double c0_base = 0.0;
    double c0_max_used = 0.0;
    std::vector<SparseEntry> entries;  // ordered by (generation, level, anchor)
};

// sum over entries of <f1>_{Lambda Q} <f2>_{Lambda Q} |Lambda Q|
long double sparse_form(const SparseFamily& s, const GridFunction& f1, const GridFunction& f2);

// A f = sum over entries of <f>_{Lambda Q} 1_{Lambda Q}, accumulated on the
// output window (dilated boxes clipped to it).
GridFunction apply_sparse(const SparseFamily& s, const GridFunction& f, const GridBox& out_window);

struct SparsityCheck {
    bool disjoint = true;       // exact pairwise disjointness of the E_Q
    bool eta_ok = true;         // every entry meets eta0 / lambda^d
    double eta_min = 1.0;
    bool subset_ok = true;      // E_Q inside Q
};

SparsityCheck verify_sparsity(const SparseFamily& s);

}  // namespace czsparse
