#include <random>

#include "czsparse/corpus.hpp"
#include "czsparse/pairing.hpp"
#include "doctest.h"

using namespace czsparse;

namespace {
GridFunction indicator(int grid_level, i64 lo_cell, i64 n_cells, i64 win_lo, i64 win_w) {
    std::vector<double> v(win_w, 0.0);
    for (i64 a = lo_cell; a < lo_cell + n_cells; ++a) v[a - win_lo] = 1.0;
    return GridFunction(1, grid_level, GridBox(1, grid_level, Anchor{win_lo, 0, 0, 0}, win_w), v);
}
}  // namespace

TEST_CASE("closed-form Hilbert pairings") {
    const Kernel k = make_kernel("hilbert");
    BumpProfile prof;
    // <T 1_[0,1), 1_[2,3)> = 3 ln 3 - 4 ln 2
    const auto f1 = indicator(0, 0, 1, -1, 6);
    const auto f2 = indicator(0, 2, 1, -1, 6);
    const auto r = pair_bilinear(PairMode::Full, 0, k, prof, f1, f2);
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(3.0 * std::log(3.0) - 4.0 * std::log(2.0)).epsilon(1e-12));

    // antisymmetry: identical inputs cancel exactly on the closed-form path
    const auto same = pair_bilinear(PairMode::Full, 0, k, prof, f1, f1);
    CHECK(same.value == 0.0);

    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        const GridFunction f =
            random_function(1, -6, GridBox(1, -6, Anchor{0, 0, 0, 0}, 128), 60 + t, "uniform");
        const auto rr = pair_bilinear(PairMode::Full, 0, k, prof, f, f);
        CHECK(std::abs(rr.value) <=
              1e-10 * static_cast<double>(f.norm_l1()) * f.norm_sup());
    }

    // the rectangle closed form at unit scale: [0,1) x [1,2) gives 2 ln 2
    CHECK(static_cast<double>(hilbert_rectangle_pair(1.0L, 2.0L, 0.0L, 1.0L)) ==
          doctest::Approx(2.0 * std::log(2.0)));
}

TEST_CASE("head + tail reassemble the full pairing") {
    const Kernel k = make_kernel("hilbert");
    BumpProfile prof;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 6; ++t) {
        const GridFunction f1 =
            random_function(1, -7, GridBox(1, -7, Anchor{0, 0, 0, 0}, 160), 700 + t, "uniform");
        const GridFunction f2 =
            random_function(1, -7, GridBox(1, -7, Anchor{40, 0, 0, 0}, 160), 800 + t, "uniform");
        const auto full = pair_bilinear(PairMode::Full, 0, k, prof, f1, f2);
        for (int s0 : {-5, -2, 1}) {
            const auto head = pair_bilinear(PairMode::HeadUpto, s0, k, prof, f1, f2);
            const auto tail = pair_bilinear(PairMode::TailFrom, s0 + 1, k, prof, f1, f2);
            const double scale = std::max(1e-30, std::abs(full.value));
            CHECK(std::abs(head.value + tail.value - full.value) / scale <= 1e-9);
        }
    }
}

TEST_CASE("scale decomposition telescopes") {
    const Kernel k = make_kernel("hilbert");
    BumpProfile prof;
    const GridFunction f1 =
        random_function(1, -6, GridBox(1, -6, Anchor{0, 0, 0, 0}, 96), 11, "uniform");
    const GridFunction f2 =
        random_function(1, -6, GridBox(1, -6, Anchor{32, 0, 0, 0}, 96), 12, "uniform");
    const int a = -4, b = 2;
    long double sum = 0.0L;
    for (int s = a; s <= b; ++s)
        sum += pair_bilinear(PairMode::SingleScale, s, k, prof, f1, f2).value;
    const auto hb = pair_bilinear(PairMode::HeadUpto, b, k, prof, f1, f2);
    const auto ha = pair_bilinear(PairMode::HeadUpto, a - 1, k, prof, f1, f2);
    const double target = hb.value - ha.value;
    CHECK(std::abs(static_cast<double>(sum) - target) <=
          1e-10 * std::max(1.0, std::abs(target)));
}

TEST_CASE("adjoint symmetry of the single-scale form") {
    BumpProfile prof;
    for (const char* name : {"hilbert", "riesz2d-x1"}) {
        const Kernel k = make_kernel(name);
        const Kernel kt = transpose_kernel(k);
        QuadratureConfig quad;
        quad.gl_order = name[0] == 'h' ? 8 : 4;
        const int dim = k.dim;
        const i64 w = dim == 1 ? 64 : 12;
        const GridFunction f1 =
            random_function(dim, -4, GridBox(dim, -4, Anchor{0, 0, 0, 0}, w), 21, "uniform");
        const GridFunction f2 =
            random_function(dim, -4, GridBox(dim, -4, Anchor{w / 2, 3, 0, 0}, w), 22, "uniform");
        for (int s : {-3, -1, 2}) {
            const auto lhs = pair_bilinear(PairMode::SingleScale, s, k, prof, f1, f2, quad);
            const auto rhs = pair_bilinear(PairMode::SingleScale, s, kt, prof, f2, f1, quad);
            CHECK(std::abs(lhs.value - rhs.value) <=
                  1e-10 * std::max(1.0, std::abs(lhs.value)));
        }
    }
}

TEST_CASE("single-scale sup bound") {
    // || T_s f ||_inf <= C_K 2^d 2^{-sd} ||f||_1, checked with slack 2
    const Kernel k = make_kernel("hilbert");
    BumpProfile prof;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 4; ++t) {
        const GridFunction f =
            random_function(1, -9, GridBox(1, -9, Anchor{0, 0, 0, 0}, 512), 400 + t, "spiky");
        const double l1 = static_cast<double>(f.norm_l1());
        for (int s = -6; s <= 6; ++s) {
            double worst = 0.0;
            for (int probe = 0; probe < 40; ++probe) {
                Point x{};
                x[0] = -1.0 + 3.0 * unit(rng);
                worst = std::max(worst, std::abs(eval_single_scale(k, prof, s, f, x)));
            }
            CHECK(worst * std::ldexp(1.0, s) <= 2.0 * k.size_constant * 2.0 * l1);
        }
    }
}

TEST_CASE("riesz quadrature sanity against a refined reference") {
    const Kernel k = make_kernel("riesz2d-x1");
    BumpProfile prof;
    QuadratureConfig coarse;
    coarse.gl_order = 4;
    coarse.depth_cap = 8;
    QuadratureConfig fine;
    fine.gl_order = 8;
    fine.depth_cap = 12;
    const GridFunction f1 =
        random_function(2, -3, GridBox(2, -3, Anchor{0, 0, 0, 0}, 8), 5, "uniform");
    const GridFunction f2 =
        random_function(2, -3, GridBox(2, -3, Anchor{6, 2, 0, 0}, 8), 6, "uniform");
    const auto a = pair_bilinear(PairMode::Full, 0, k, prof, f1, f2, coarse);
    const auto b = pair_bilinear(PairMode::Full, 0, k, prof, f1, f2, fine);
    CHECK(std::abs(a.value - b.value) <=
          std::max(1e-6, a.error_bound + b.error_bound + 1e-6 * std::abs(b.value)));
    // identical nonnegative inputs: odd kernel pairs cancel up to the reported bound
    const auto diag = pair_bilinear(PairMode::Full, 0, k, prof, f1, f1, coarse);
    CHECK(std::abs(diag.value) <= diag.error_bound + 1e-6);
}

TEST_CASE("pointwise head evaluation vanishes off the dilated cube") {
    const Kernel k = make_kernel("hilbert");
    BumpProfile prof;
    const GridFunction f = indicator(-4, 0, 16, 0, 16);  // 1_[0,1)
    const auto sc = scale_constants(1);
    const DyadicCube q(1, 0, Anchor{0, 0, 0, 0});
    const int cap = scale_index(q, sc.k_d);
    Point x{};
    x[0] = 9.0;  // outside Lambda Q = [-8, 9)
    CHECK(std::abs(eval_head_upto(k, prof, cap, f, x)) <= 1e-9);
    x[0] = 3.0;  // inside Lambda Q but off supp f: head need not vanish
    CHECK(std::isfinite(eval_head_upto(k, prof, cap, f, x)));
}
