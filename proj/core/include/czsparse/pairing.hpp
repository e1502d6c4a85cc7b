#pragma once

#include "czsparse/grid_function.hpp"
#include "czsparse/kernel.hpp"

namespace czsparse {

struct QuadratureConfig {
    int gl_order = 8;        // Gauss-Legendre points per axis
    int depth_cap = 40;      // graded-subdivision depth toward touching boundaries
    i64 pair_budget = 20000; // sub-pair budget per singular cell pair
    double tol = 1e-12;      // target for the reported bound

    void validate() const;
};

// Which truncation of the operator the bilinear form uses.
//   Full          <T f1, f2>
//   SingleScale   scale-s piece, kernel psi((x-y)/2^s) K
//   TailFrom      sum of scales s >= s0 (vanishes near the diagonal)
//   HeadUpto      T minus the tail from s0+1, evaluated as that difference
enum class PairMode { Full, SingleScale, TailFrom, HeadUpto };

struct PairingResult {
    double value = 0.0;
    double error_bound = 0.0;  // singular exclusions, capped tails, roundoff proxy
    bool exact = false;        // closed-form cell-pair path
};

// <T_mode f1, f2> = sum over cell pairs of f1(c) f2(c') Int_{c' x c} K_mode.
// f1 and f2 must share grid level (windows may differ).
PairingResult pair_bilinear(PairMode mode, int scale, const Kernel& k, const BumpProfile& profile,
                            const GridFunction& f1, const GridFunction& f2,
                            const QuadratureConfig& quad = {});

// Pointwise evaluations used by the localization and single-scale checks.
double eval_single_scale(const Kernel& k, const BumpProfile& profile, int s,
                         const GridFunction& f, const Point& x, const QuadratureConfig& quad = {});
double eval_full(const Kernel& k, const GridFunction& f, const Point& x,
                 const QuadratureConfig& quad = {});
double eval_tail_from(const Kernel& k, const BumpProfile& profile, int s0, const GridFunction& f,
                      const Point& x, const QuadratureConfig& quad = {});
double eval_head_upto(const Kernel& k, const BumpProfile& profile, int s0, const GridFunction& f,
                      const Point& x, const QuadratureConfig& quad = {});

// Closed-form double integral of 1/(x-y) over [a,b) x [alpha,beta).
long double hilbert_rectangle_pair(long double a, long double b, long double alpha,
                                   long double beta);

// Scale range outside which every scale-s piece of the pairing vanishes.
int max_relevant_scale(const GridFunction& f1, const GridFunction& f2);

}  // namespace czsparse
