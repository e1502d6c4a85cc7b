#include "czsparse/dyadic.hpp"

#include <cmath>

namespace czsparse {

namespace {
// Arithmetic shift implements floor division by 2^e for negative anchors too.
inline i64 floor_div_pow2(i64 a, int e) { return a >> e; }
}  // namespace

DyadicCube DyadicCube::parent() const {
    Anchor a{};
    for (int i = 0; i < dim; ++i) a[i] = floor_div_pow2(anchor[i], 1);
    return DyadicCube(dim, level + 1, a);
}

DyadicCube DyadicCube::child(int index) const {
    if (index < 0 || index >= num_children()) throw std::invalid_argument("child index");
    Anchor a{};
    for (int i = 0; i < dim; ++i) a[i] = 2 * anchor[i] + ((index >> i) & 1);
    return DyadicCube(dim, level - 1, a);
}

bool DyadicCube::contained_in(const DyadicCube& outer) const {
    if (dim != outer.dim || level > outer.level) return false;
    const int e = outer.level - level;
    if (e > 62) return false;
    for (int i = 0; i < dim; ++i)
        if (floor_div_pow2(anchor[i], e) != outer.anchor[i]) return false;
    return true;
}

bool DyadicCube::disjoint_from(const DyadicCube& o) const {
    if (level <= o.level) return !contained_in(o);
    return !o.contained_in(*this);
}

bool cube_less(const DyadicCube& a, const DyadicCube& b) {
    if (a.level != b.level) return a.level < b.level;
    for (int i = 0; i < a.dim; ++i)
        if (a.anchor[i] != b.anchor[i]) return a.anchor[i] < b.anchor[i];
    return false;
}

bool GridBox::contains_box(const GridBox& inner) const {
    if (dim != inner.dim) return false;
    const int u = std::min(level, inner.level);
    const GridBox a = refined_to(u), b = inner.refined_to(u);
    for (int i = 0; i < dim; ++i) {
        if (b.lo[i] < a.lo[i] || b.lo[i] + b.width > a.lo[i] + a.width) return false;
    }
    return true;
}

bool GridBox::intersects(const GridBox& o) const {
    if (dim != o.dim) return false;
    const int u = std::min(level, o.level);
    const GridBox a = refined_to(u), b = o.refined_to(u);
    for (int i = 0; i < dim; ++i) {
        if (a.lo[i] + a.width <= b.lo[i] || b.lo[i] + b.width <= a.lo[i]) return false;
    }
    return true;
}

GridBox box_of_cube(const DyadicCube& q) { return GridBox(q.dim, q.level, q.anchor, 1); }

GridBox dilate(const DyadicCube& q, i64 lambda) {
    if (lambda <= 0 || lambda % 2 == 0)
        throw std::invalid_argument("dilate: lambda must be odd and positive");
    Anchor lo{};
    for (int i = 0; i < q.dim; ++i) lo[i] = q.anchor[i] - (lambda - 1) / 2;
    return GridBox(q.dim, q.level, lo, lambda);
}

GridBox dilate_double(const DyadicCube& q, i64 lambda) {
    if (lambda <= 0) throw std::invalid_argument("dilate_double: lambda must be positive");
    Anchor lo{};
    for (int i = 0; i < q.dim; ++i) lo[i] = 2 * q.anchor[i] + 1 - 2 * lambda;
    return GridBox(q.dim, q.level - 1, lo, 4 * lambda);
}

ScaleConstants scale_constants(int dim, const Rational& c_w_multiplier) {
    if (dim < 1) throw std::invalid_argument("scale_constants: dim must be >= 1");
    if (c_w_multiplier < Rational(1))
        throw std::invalid_argument("scale_constants: multiplier must be >= 1");
    ScaleConstants sc;
    sc.dim = dim;
    sc.k_d = 1;
    // smallest k with 4^(k-1) > d
    while (!((i64{1} << (2 * (sc.k_d - 1))) > dim)) ++sc.k_d;
    sc.lambda_d = (i64{1} << (sc.k_d + 2)) + 1;
    const i64 m = 2 * sc.lambda_d + 1;
    const i64 r = isqrt_floor(dim * m * m);
    const i64 ceil_sqrt = r + (r * r < dim * m * m ? 1 : 0);
    sc.c_w = c_w_multiplier * Rational(ceil_sqrt + 1);
    // invariant: c_w > sqrt(d) * (2 lambda_d + 1), exact squared comparison
    if (cmp_rational_minus_sqrt(sc.c_w, Rational(m), dim) <= 0)
        throw std::logic_error("scale_constants: Whitney constant too small");
    return sc;
}

Annulus annulus(const DyadicCube& q0, int s, int k_d) {
    if (s <= scale_index(q0, k_d))
        throw std::invalid_argument("annulus: requires s > scale_index(Q)");
    Annulus a;
    a.dim = q0.dim;
    a.center_level = q0.level - 1;
    a.center = q0.center_times2();
    a.log2_r_lo = s - 2;
    a.log2_r_hi = k_d + s;
    return a;
}

bool Annulus::contains_point(const Anchor& p, int p_level) const {
    if (p_level > center_level)
        throw std::invalid_argument("Annulus::contains_point: point lattice too coarse");
    const int e = center_level - p_level;
    if (e > 40) throw std::overflow_error("Annulus::contains_point: scale gap too large");
    i128 d2 = 0;
    for (int i = 0; i < dim; ++i) {
        const i128 diff = static_cast<i128>(p[i]) - (static_cast<i128>(center[i]) << e);
        d2 += diff * diff;
    }
    // radii in units 2^p_level: exponents of the squared radii
    const int e_lo = 2 * (log2_r_lo - p_level);
    const int e_hi = 2 * (log2_r_hi - p_level);
    if (e_lo < 0 || e_hi > 124) throw std::overflow_error("Annulus::contains_point: radius range");
    const i128 r2_lo = i128{1} << e_lo;
    const i128 r2_hi = i128{1} << e_hi;
    return d2 >= r2_lo && d2 <= r2_hi;
}

bool Annulus::contains_real(const std::array<double, kMaxDim>& x) const {
    const double unit = std::ldexp(1.0, center_level);
    double d2 = 0;
    for (int i = 0; i < dim; ++i) {
        const double diff = x[i] - static_cast<double>(center[i]) * unit;
        d2 += diff * diff;
    }
    const double lo = std::ldexp(1.0, log2_r_lo), hi = std::ldexp(1.0, log2_r_hi);
    return d2 >= lo * lo && d2 <= hi * hi;
}

}  // namespace czsparse
