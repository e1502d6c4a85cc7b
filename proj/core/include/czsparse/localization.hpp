#pragma once

#include "czsparse/pairing.hpp"
#include "czsparse/whitney.hpp"

namespace czsparse {

struct LocalizationReport {
    i64 annulus_samples = 0;
    i64 annulus_violations = 0;   // K_s(x,y) != 0 with y in Q, x outside the shell
    i64 support_samples = 0;
    i64 support_violations = 0;   // |head(f 1_Q)(x)| > tol outside Lambda_d Q
    double max_offsupport_value = 0.0;
    double tolerance = 0.0;
    bool has_witness = false;
    int witness_scale = 0;
    Point witness_x{}, witness_y{};

    bool ok() const { return annulus_violations == 0 && support_violations == 0; }
};

// (a) sampled scales s > scale_index(Q), y in Q, x off the shell: the
//     truncated kernel must vanish identically (exact zero branches).
// (b) sampled x outside Lambda_d Q: the head truncation of f 1_Q must vanish
//     up to quadrature tolerance.
LocalizationReport check_localization(const Kernel& k, const BumpProfile& profile,
                                      const DyadicCube& q, const GridFunction& f,
                                      const ScaleConstants& sc, i64 sample_budget,
                                      std::uint64_t seed, double tol,
                                      const QuadratureConfig& quad = {});

}  // namespace czsparse
