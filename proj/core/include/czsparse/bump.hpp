#pragma once

#include <array>

#include "czsparse/dyadic.hpp"

namespace czsparse {

using Point = std::array<double, kMaxDim>;

// Radial Littlewood-Paley profile.  With h(t) = exp(-1/t) for t > 0 (else 0),
//   phi(x) = 1 for |x| <= 1,  0 for |x| >= 2,
//   phi(x) = h(2-|x|) / (h(2-|x|) + h(|x|-1)) in between,
// and psi(x) = phi(x) - phi(2x), supported on {1/2 < |x| < 2}.
// Branches are decided on the squared radius so the zero set is exact in
// floating point; sum_k psi(x / 2^k) telescopes to 1 for x != 0.
struct BumpProfile {
    double phi_r2(double r2) const;
    double psi_r2(double r2) const;
    double psi(const Point& x, int dim) const;
    // sum over |k| <= k_range of psi(x / 2^k)
    double psi_partition_sum(const Point& x, int dim, int k_range) const;
};

}  // namespace czsparse
