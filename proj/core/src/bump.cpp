#include "czsparse/bump.hpp"

#include <cmath>

namespace czsparse {

namespace {
inline double glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}  // namespace

double BumpProfile::phi_r2(double r2) const {
    if (r2 <= 1.0) return 1.0;
    if (r2 >= 4.0) return 0.0;
    const double r = std::sqrt(r2);
    const double a = glue(2.0 - r), b = glue(r - 1.0);
    return a / (a + b);
}

double BumpProfile::psi_r2(double r2) const {
    if (r2 <= 0.25 || r2 >= 4.0) return 0.0;
    return phi_r2(r2) - phi_r2(4.0 * r2);
}

double BumpProfile::psi(const Point& x, int dim) const {
    double r2 = 0.0;
    for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
    return psi_r2(r2);
}

double BumpProfile::psi_partition_sum(const Point& x, int dim, int k_range) const {
    double r2 = 0.0;
    for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
    double s = 0.0;
    for (int k = -k_range; k <= k_range; ++k) s += psi_r2(std::ldexp(r2, -2 * k));
    return s;
}

}  // namespace czsparse
