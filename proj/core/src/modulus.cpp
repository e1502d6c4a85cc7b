#include "czsparse/modulus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace czsparse {

ModulusOfContinuity modulus_linear(double c) {
    return {"linear", [c](double t) { return c * t; }};
}

ModulusOfContinuity modulus_sqrt() {
    return {"sqrt", [](double t) { return std::sqrt(t); }};
}

ModulusOfContinuity modulus_log_squared() {
    return {"log-squared", [](double t) {
                if (t <= 0.0) return 0.0;
                const double u = 1.0 + std::log(1.0 / t);
                return 1.0 / (u * u);
            }};
}

ModulusOfContinuity modulus_constant(double c) {
    return {"constant", [c](double t) { return t > 0.0 ? c : 0.0; }};
}

ModulusOfContinuity modulus_tilde(const ModulusOfContinuity& omega) {
    auto base = omega.eval;
    return {omega.name + "+t", [base](double t) { return t + base(t); }};
}

namespace {
// 16-point Gauss-Legendre on [-1, 1]
constexpr double kGlNodes16[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                  0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                  0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeights16[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                    0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        s += kGlWeights16[i] * (f(mid + half * kGlNodes16[i]) + f(mid - half * kGlNodes16[i]));
    }
    return s * half;
}
}  // namespace

namespace {

// Forward-summed majorant sum_{k>=start} omega(2^-k) log 2 with a geometric
// closure once the terms have become negligible; +inf when no bound below
// ~10 tol is reachable within the lookahead.
double majorant_tail(const ModulusOfContinuity& omega, int start, double tol) {
    const double ln2 = std::log(2.0);
    double total = 0.0, prev = -1.0;
    for (int k = start, steps = 0; steps < (1 << 22); ++k, ++steps) {
        const double b = omega(std::ldexp(1.0, -k)) * ln2;
        total += b;
        if (total > 10.0 * tol) return std::numeric_limits<double>::infinity();
        if (prev >= 0.0 && b < prev) {
            const double r = b / std::max(prev, 1e-300);
            if (b <= tol * 1e-3 && r < 0.999) return total + b * r / (1.0 - r);
        }
        if (b == 0.0) return total;
        prev = b;
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace

DiniResult dini_integral(const ModulusOfContinuity& omega, double tol, int max_intervals,
                         double divergence_cap) {
    if (!(tol > 0.0)) throw std::invalid_argument("dini_integral: tol must be positive");
    DiniResult out;
    long double sum = 0.0L;
    int next_check = 8;
    // below 2^-1000 the integrand's 1/t side leaves double range; the tail of
    // the modulus as evaluated there is folded into the error estimate
    const int j_floor = 999;
    for (int j = 0; j < max_intervals; ++j) {
        const double hi = std::ldexp(1.0, -j), lo = std::ldexp(1.0, -j - 1);
        sum += gl16([&](double t) { return omega(t) / t; }, lo, hi);
        out.intervals = j + 1;
        if (static_cast<double>(sum) > divergence_cap) {
            out.divergent = true;
            out.value = static_cast<double>(sum);
            return out;
        }
        const bool at_floor = j >= j_floor;
        if (j + 1 >= next_check || at_floor) {
            next_check = next_check + std::max(8, next_check / 2);
            const double tail = majorant_tail(omega, j + 1, tol);
            out.error_estimate = tail;
            if (tail < tol || at_floor) {
                out.value = static_cast<double>(sum);
                out.converged = tail < tol;
                return out;
            }
        }
    }
    out.value = static_cast<double>(sum);
    out.converged = false;
    return out;
}

}  // namespace czsparse
