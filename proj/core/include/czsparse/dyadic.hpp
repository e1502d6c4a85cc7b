#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "czsparse/rational.hpp"

namespace czsparse {

constexpr int kMaxDim = 4;
using Anchor = std::array<i64, kMaxDim>;

// Half-open dyadic cube  prod_i [a_i 2^s, (a_i+1) 2^s)  with side 2^s.
// All geometry on cubes is integer arithmetic on (level, anchor); distances
// are carried as exact squared quantities in a common dyadic unit.
struct DyadicCube {
    int dim = 1;
    int level = 0;
    Anchor anchor{};

    DyadicCube() = default;
    DyadicCube(int d, int s, Anchor a) : dim(d), level(s), anchor(a) {
        if (d < 1 || d > kMaxDim) throw std::invalid_argument("DyadicCube: bad dimension");
    }

    DyadicCube parent() const;
    DyadicCube child(int index) const;  // index in [0, 2^dim)
    int num_children() const { return 1 << dim; }

    bool operator==(const DyadicCube& o) const {
        if (dim != o.dim || level != o.level) return false;
        for (int i = 0; i < dim; ++i)
            if (anchor[i] != o.anchor[i]) return false;
        return true;
    }

    // this cube contained in `outer` (requires level <= outer.level).
    bool contained_in(const DyadicCube& outer) const;
    bool disjoint_from(const DyadicCube& o) const;

    // Center coordinates in units of 2^{level-1}: always the odd integer 2a+1.
    Anchor center_times2() const {
        Anchor c{};
        for (int i = 0; i < dim; ++i) c[i] = 2 * anchor[i] + 1;
        return c;
    }
};

bool cube_less(const DyadicCube& a, const DyadicCube& b);  // order by (level, anchor)

// Axis-aligned square box with corners on the level-`level` lattice:
// prod_i [lo_i 2^level, (lo_i+width) 2^level).  Realizes concentric dilations
// lambda*Q (lambda odd: same level, width lambda) and 2*lambda*Q (level-1).
struct GridBox {
    int dim = 1;
    int level = 0;
    Anchor lo{};
    i64 width = 1;

    GridBox() = default;
    GridBox(int d, int s, Anchor l, i64 w) : dim(d), level(s), lo(l), width(w) {
        if (w <= 0) throw std::invalid_argument("GridBox: width must be positive");
    }

    // Same box expressed on a finer lattice.
    GridBox refined_to(int finer_level) const {
        if (finer_level > level) throw std::invalid_argument("refined_to: coarser lattice");
        const i64 f = i64ptwo(level - finer_level);
        Anchor l{};
        for (int i = 0; i < dim; ++i) l[i] = lo[i] * f;
        return GridBox(dim, finer_level, l, width * f);
    }

    bool contains_box(const GridBox& inner) const;
    bool intersects(const GridBox& o) const;

    static i64 i64ptwo(int e) {
        if (e < 0 || e > 62) throw std::overflow_error("power of two out of range");
        return i64{1} << e;
    }
};

GridBox box_of_cube(const DyadicCube& q);

// lambda*Q for odd lambda >= 1; rejects even lambda (grid alignment fails).
GridBox dilate(const DyadicCube& q, i64 lambda);

// (2*lambda)*Q, grid-aligned one level below Q.
GridBox dilate_double(const DyadicCube& q, i64 lambda);

// k(d), Lambda_d and the Whitney constant.
//   k_d      : smallest positive integer with 2^(k_d - 1) > sqrt(d),
//              checked as 4^(k_d - 1) > d.
//   lambda_d : 2^(k_d + 2) + 1.
//   c_w      : multiplier * (ceil(sqrt(d) * (2*lambda_d + 1)) + 1); the integer
//              base keeps all layer thresholds exactly representable.
struct ScaleConstants {
    int dim = 1;
    int k_d = 2;
    i64 lambda_d = 17;
    Rational c_w{36};
};

ScaleConstants scale_constants(int dim, const Rational& c_w_multiplier = Rational(1));

inline int scale_index(const DyadicCube& q, int k_d) { return q.level + k_d; }

// Shell {x : |x - x_Q| in [2^(s-2), 2^(k_d + s)]}, defined for s > scale_index(Q).
// Membership of lattice points decides both squared radii in integer arithmetic.
struct Annulus {
    int dim = 1;
    int center_level = 0;  // center coordinates are in units of 2^center_level
    Anchor center{};
    int log2_r_lo = 0;
    int log2_r_hi = 0;

    // p given in units of 2^p_level with p_level <= center_level.
    bool contains_point(const Anchor& p, int p_level) const;
    bool contains_real(const std::array<double, kMaxDim>& x) const;
};

Annulus annulus(const DyadicCube& q0, int s, int k_d);

}  // namespace czsparse
