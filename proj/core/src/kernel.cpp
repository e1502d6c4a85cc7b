#include "czsparse/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace czsparse {

Kernel make_kernel(const std::string& name) {
    Kernel k;
    k.name = name;
    if (name == "hilbert") {
        k.dim = 1;
        k.size_constant = 1.0;
        k.smooth_constant = 4.0;
        k.modulus = modulus_linear(1.0);
        k.odd = true;
        k.exact_cell_pairs = true;
        k.eval = [](const Point& x, const Point& y) { return 1.0 / (x[0] - y[0]); };
        return k;
    }
    if (name == "riesz2d-x1") {
        k.dim = 2;
        k.size_constant = 1.0;
        k.smooth_constant = 64.0;
        k.modulus = modulus_linear(1.0);
        k.odd = true;
        k.exact_cell_pairs = false;
        k.eval = [](const Point& x, const Point& y) {
            const double d0 = x[0] - y[0], d1 = x[1] - y[1];
            const double r = std::sqrt(d0 * d0 + d1 * d1);
            return d0 / (r * r * r);
        };
        return k;
    }
    throw std::invalid_argument("make_kernel: unknown kernel '" + name + "'");
}

Kernel transpose_kernel(const Kernel& k) {
    Kernel t = k;
    t.name = k.name + "-transpose";
    auto base = k.eval;
    t.eval = [base](const Point& x, const Point& y) { return base(y, x); };
    return t;
}

double kernel_truncated(const Kernel& k, const BumpProfile& profile, int s, const Point& x,
                        const Point& y) {
    double r2 = 0.0;
    for (int i = 0; i < k.dim; ++i) r2 += (x[i] - y[i]) * (x[i] - y[i]);
    const double w = profile.psi_r2(std::ldexp(r2, -2 * s));
    if (w == 0.0) return 0.0;
    return w * k.eval(x, y);
}

}  // namespace czsparse
