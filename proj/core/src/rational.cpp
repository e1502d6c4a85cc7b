#include "czsparse/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace czsparse {

namespace mp = boost::multiprecision;

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 9) frac = frac.substr(0, 9);
    i64 den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    const i64 whole = std::stoll(s.substr(0, dot));
    const i64 f = frac.empty() ? 0 : std::stoll(frac);
    const bool neg = s[0] == '-';
    return Rational(whole * den + (neg ? -f : f), den);
}

i64 isqrt_floor(i64 x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor: negative input");
    if (x < 2) return x;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

int cmp_rational_minus_sqrt(const Rational& a, const Rational& b, i64 d) {
    if (b.num < 0) throw std::invalid_argument("cmp_rational_minus_sqrt: b must be >= 0");
    if (b.num == 0 || d == 0) return a.num < 0 ? -1 : (a.num > 0 ? 1 : 0);
    if (a.num <= 0) return -1;
    // a, b > 0: sign(a - b sqrt(d)) = sign(a^2 - d b^2)
    const mp::int256_t lhs = mp::int256_t(a.num) * a.num * b.den * b.den;
    const mp::int256_t rhs = mp::int256_t(d) * b.num * b.num * a.den * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool ge_cw_minus_sqrtd_squared(const Rational& q2, const Rational& cw, i64 d, const Rational& l2) {
    if (q2.num < 0 || l2.num < 0) throw std::invalid_argument("squared lengths must be >= 0");
    // q2 >= (cw^2 + d) l2 - 2 cw l2 sqrt(d); clear denominators (all positive).
    const mp::int256_t n1 = q2.num, d1 = q2.den;
    const mp::int256_t p = cw.num, q = cw.den;
    const mp::int256_t n2 = l2.num, d2 = l2.den;
    const mp::int256_t x = n1 * d2 * q * q - (p * p + d * q * q) * n2 * d1;
    if (x >= 0) return true;
    const mp::int256_t y = 2 * p * q * n2 * d1;
    // x < 0: condition is |x| <= y sqrt(d), i.e. x^2 <= d y^2.
    return x * x <= d * y * y;
}

}  // namespace czsparse
