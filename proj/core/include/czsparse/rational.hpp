#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace czsparse {

using i64 = std::int64_t;
using i128 = __int128;

// Small exact rational on int64, normalized with positive denominator.
// Whitney thresholds and dilation bookkeeping never leave this range.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, i64 k) { return Rational(a.num * k, a.den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num) * b.den <= static_cast<i128>(b.num) * a.den;
    }
};

Rational rational_from_string(const std::string& s);

// Floor of sqrt for nonnegative integers.
i64 isqrt_floor(i64 x);

// Exact sign of (a - b*sqrt(d)) for rationals a, b with b >= 0 and integer d >= 0.
// Used for every comparison of a squared distance against a (C - sqrt(d))-type
// threshold; the arithmetic stays in int128 after cross-multiplication, which
// the calling code keeps in range by construction (grid spans < 2^20 cells).
int cmp_rational_minus_sqrt(const Rational& a, const Rational& b, i64 d);

// Decide q2 >= (cw - sqrt(d))^2 * l2 exactly, where q2 and l2 are exact
// nonnegative rationals (squared lengths in a common dyadic unit) and
// cw > sqrt(d).  Equivalent to sqrt(q2) >= cw*sqrt(l2) - sqrt(d*l2).
bool ge_cw_minus_sqrtd_squared(const Rational& q2, const Rational& cw, i64 d, const Rational& l2);

}  // namespace czsparse
