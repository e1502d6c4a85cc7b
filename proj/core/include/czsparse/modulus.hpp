#pragma once

#include <functional>
#include <string>

namespace czsparse {

// Modulus of continuity on [0,1]: continuous, nondecreasing, omega(0+) = 0.
struct ModulusOfContinuity {
    std::string name;
    std::function<double(double)> eval;

    double operator()(double t) const { return eval(t); }
};

ModulusOfContinuity modulus_linear(double c = 1.0);  // omega(t) = c t
ModulusOfContinuity modulus_sqrt();                  // omega(t) = sqrt(t)
ModulusOfContinuity modulus_log_squared();           // omega(t) = (1 + log(1/t))^-2
ModulusOfContinuity modulus_constant(double c);      // fails the Dini condition
// omega~(t) = t + omega(t), the modulus the truncations inherit
ModulusOfContinuity modulus_tilde(const ModulusOfContinuity& omega);

struct DiniResult {
    double value = 0.0;
    double error_estimate = 0.0;  // observed-tail estimate, see dini_integral
    bool converged = false;
    bool divergent = false;
    int intervals = 0;
};

// Integral of omega(t)/t over (0,1], summed over dyadic subintervals
// [2^-j-1, 2^-j] with Gauss-Legendre panels, until the monotone tail majorant
// sum_{i>J} omega(2^-i) log 2 (estimated from its observed decay ratio) drops
// below tol.  Slowly decaying moduli exhaust `max_intervals` and come back
// with converged=false; partial sums past `divergence_cap` flag divergence.
DiniResult dini_integral(const ModulusOfContinuity& omega, double tol,
                         int max_intervals = 200000, double divergence_cap = 1e9);

}  // namespace czsparse
