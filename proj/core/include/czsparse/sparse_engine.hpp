#pragma once

#include <limits>

#include "czsparse/maximal.hpp"
#include "czsparse/pairing.hpp"
#include "czsparse/sparse_family.hpp"
#include "czsparse/whitney.hpp"

namespace czsparse {

struct SparseParams {
    double eta0 = 0.5;
    double c0 = 0.0;    // 0: use the default stopping constant
    double c_m = 0.0;   // 0: default maximal-function constant 2 * 3^d * 6^d
    int s_floor = std::numeric_limits<int>::min();  // iteration floor; default: grid level
    bool auto_escalate = true;
    int max_escalations = 60;
    double residual_c_op = 1.0;
    QuadratureConfig quad{};
};

// Weak-type constant folded with the lattice-maximal comparability.
double default_c_m(int dim);
// c0 = 2 c_m lambda_d^d / (1 - eta0)
double default_c0(const ScaleConstants& sc, double eta0, double c_m);

// Union over i of the cells (inside 2 Lambda_d Q) where the lattice maximal
// function of the localized f_i exceeds c0 <f_i>_{Lambda_d Q} / 3^d; the 3^d
// divisor converts the lattice maximal bound into one for the uncentered
// maximal function.  Zero averages contribute nothing.
Region stopping_region(const GridFunction& f1_loc, const GridFunction& f2_loc,
                       const DyadicCube& q, double c0, const ScaleConstants& sc);

struct NodeOutcome {
    Region omega;
    std::vector<DyadicCube> children;  // Whitney cubes inside Q carrying f1 mass
    std::vector<DyadicCube> frontier;  // kept floor cells, same filter
    Region major;                      // E_Q = Q minus children minus frontier
    int escalations = 0;
    double c0_used = 0.0;
};

// One stopping-time step at Q with already-localized inputs.  When
// auto-escalation is on, c0 doubles until |Omega_Q| <= (1 - eta0) |Q|.
NodeOutcome iterate_once(const DyadicCube& q, const GridFunction& f1_loc,
                         const GridFunction& f2_loc, const ScaleConstants& sc,
                         const SparseParams& p);

struct GenerationStat {
    int generation = 0;
    i64 base_cells = 0;        // sum of |Q| over the generation, exact
    long double measure = 0.0L;
};

struct BuildDiagnostics {
    std::vector<GenerationStat> decay;
    i64 omega0_cells = 0;      // |Omega_{Q_0}| at the accepted root threshold
    i64 total_nodes = 0;
    int max_generation = 0;
    int root_escalations = 0;  // extra root doublings for the first-generation mass bound
    std::vector<DyadicCube> residual_cubes;  // floor leaves and kept frontier cells
};

// Breadth-first stopping-time recursion over generations.  The root threshold
// additionally escalates until the first generation's mass is at most
// (1 - eta0) |Omega_{Q_0}|, which pins the measured decay
//     sum_{P_n} |Q| <= (1 - eta0)^n |Omega_{Q_0}|   for all n >= 1.
std::pair<SparseFamily, BuildDiagnostics> build_sparse(const GridFunction& f1,
                                                       const GridFunction& f2,
                                                       const DyadicCube& q0, double eta0,
                                                       SparseParams p);

struct DominationCertificate {
    SparseFamily family;
    BuildDiagnostics diagnostics;
    PairingResult pairing;            // <T f1, f2>
    long double sparse_form_value = 0.0L;
    double residual_numeric = 0.0;    // sum of |leaf pairings|
    double residual_quad_bound = 0.0;
    double residual_analytic = 0.0;   // c_op ||f1||inf ||f2||inf sum |L|
    double residual_total = 0.0;
    i64 residual_leaves = 0;
    double ratio = 0.0;
    bool ratio_defined = false;
    SparseParams params;
    std::string kernel_name;
};

DominationCertificate dominate(const Kernel& k, const BumpProfile& profile,
                               const GridFunction& f1, const GridFunction& f2,
                               const DyadicCube& q0, double eta0, const SparseParams& p);

}  // namespace czsparse
