#pragma once

#include <functional>
#include <string>

#include "czsparse/bump.hpp"
#include "czsparse/modulus.hpp"

namespace czsparse {

// Off-diagonal integral kernel with |K(x,y)| <= size_constant |x-y|^-d and a
// modulus-of-continuity smoothness bound with constant smooth_constant.
struct Kernel {
    std::string name;
    int dim = 1;
    double size_constant = 1.0;
    double smooth_constant = 1.0;
    ModulusOfContinuity modulus;
    std::function<double(const Point&, const Point&)> eval;
    bool odd = false;                 // K(y,x) == -K(x,y)
    bool exact_cell_pairs = false;    // closed-form rectangle-pair integrals (d=1)

    double operator()(const Point& x, const Point& y) const { return eval(x, y); }
};

// Built-ins: "hilbert" (d=1, 1/(x-y)) and "riesz2d-x1" (d=2, (x1-y1)/|x-y|^3).
Kernel make_kernel(const std::string& name);
Kernel transpose_kernel(const Kernel& k);

// K_s(x,y) = psi((x-y)/2^s) K(x,y); zero unless |x-y| in (2^(s-1), 2^(s+1)).
double kernel_truncated(const Kernel& k, const BumpProfile& profile, int s, const Point& x,
                        const Point& y);

}  // namespace czsparse
