#include <random>

#include "czsparse/corpus.hpp"
#include "czsparse/maximal.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace czsparse;

TEST_CASE("maximal function basics") {
    // constant input: the maximal function is the same constant
    GridFunction c(1, -2, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16), std::vector<double>(16, 3.0));
    const auto mc = lattice_maximal(c, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16));
    for (i64 i = 0; i < mc.num_cells(); ++i) CHECK(mc.cell_value(i) == doctest::Approx(3.0));

    // at a cell realizing the sup, the maximal function equals the sup
    std::vector<double> v(16, 0.2);
    v[7] = 5.0;
    GridFunction f(1, -2, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16), v);
    const auto mf = lattice_maximal(f, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16));
    CHECK(mf.value_at(Anchor{7, 0, 0, 0}) == doctest::Approx(5.0));

    // f = 1_[0,1) on grid level -2; cell [2, 2.25): best interval is [0, 9/4)
    std::vector<double> ind(16, 0.0);
    for (int i = 0; i < 4; ++i) ind[i] = 1.0;
    GridFunction g(1, -2, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16), ind);
    const auto mg = lattice_maximal(g, GridBox(1, -2, Anchor{0, 0, 0, 0}, 16));
    CHECK(mg.value_at(Anchor{8, 0, 0, 0}) == doctest::Approx(4.0 / 9.0));
}

TEST_CASE("maximal matches the exhaustive oracle") {
    for (int trial = 0; trial < 8; ++trial) {
        const int dim = 1 + trial % 2;
        const i64 w = dim == 1 ? 200 : 16;
        GridBox win(dim, -3, Anchor{-7, 3, 0, 0}, w);
        const GridFunction f = random_function(dim, -3, win, 31 + trial, "uniform");
        const auto got = lattice_maximal(f, win);
        const auto want = oracle::lattice_maximal_bruteforce(f, win);
        REQUIRE(got.num_cells() == want.num_cells());
        for (i64 i = 0; i < got.num_cells(); ++i)
            CHECK(got.cell_value(i) == doctest::Approx(want.cell_value(i)).epsilon(1e-12));
    }
}

TEST_CASE("superlevel sets") {
    GridFunction z(1, 0, GridBox(1, 0, Anchor{0, 0, 0, 0}, 8), std::vector<double>(8, 0.0));
    CHECK(superlevel(z, 0.5).empty());
    CHECK(superlevel(z, 0.0).empty());  // strict inequality

    GridFunction f(1, 0, GridBox(1, 0, Anchor{0, 0, 0, 0}, 4), {1, 2, 3, 4});
    CHECK(superlevel(f, 4.0).empty());  // threshold at the max: strict
    CHECK(superlevel(f, 2.5).cell_count() == 2);

    std::mt19937_64 rng(5);
    const GridFunction r = random_function(1, -4, GridBox(1, -4, Anchor{0, 0, 0, 0}, 64), 77, "uniform");
    const double t = 0.3 + 0.4 * 0.5;
    const Region s = superlevel(r, t);
    for (i64 i = 0; i < r.num_cells(); ++i)
        CHECK(s.contains_cell(r.unflat(i)) == (r.cell_value(i) > t));
}

TEST_CASE("superlevel of maximal: fast path equals the composition") {
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 1 + trial % 2;
        const i64 w = dim == 1 ? 180 : 14;
        GridBox win(dim, -3, Anchor{-5, -9, 0, 0}, w);
        const GridFunction f =
            random_function(dim, -3, win, 900 + trial, trial % 2 ? "uniform" : "spiky");
        const double t = 0.25 * (1 + trial % 4) * static_cast<double>(average(f, win));
        const Region fast = superlevel_of_maximal(f, win, t);
        const Region slow = superlevel(lattice_maximal(f, win), t);
        CHECK(fast.cells == slow.cells);
    }
}

TEST_CASE("uncentered maximal comparability: sampled cubes obey M <= 3^d Mhat") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        const int dim = 1 + trial % 2;
        const i64 w = dim == 1 ? 96 : 16;
        GridBox win(dim, -3, Anchor{0, 0, 0, 0}, w);
        const GridFunction f = random_function(dim, -3, win, 40 + trial, "uniform");
        const auto mf = lattice_maximal(f, win);
        const double h = std::ldexp(1.0, -3);
        const double three_pow = std::pow(3.0, dim);
        for (int probe = 0; probe < 300; ++probe) {
            // random real cube R inside the window and a point x in it
            const double side = h * (0.5 + unit(rng) * (static_cast<double>(w) - 1.0));
            double lo[2], sum = 0.0;
            for (int i = 0; i < dim; ++i)
                lo[i] = unit(rng) * (static_cast<double>(w) * h - side);
            // integrate f over R exactly (piecewise constant)
            const int steps = 64;
            double cellctr[2];
            for (int sx = 0; sx < steps; ++sx) {
                if (dim == 1) {
                    cellctr[0] = lo[0] + (sx + 0.5) * side / steps;
                    Anchor a{static_cast<i64>(std::floor(cellctr[0] / h)), 0, 0, 0};
                    sum += f.value_at(a) * (side / steps);
                } else {
                    for (int sy = 0; sy < steps; ++sy) {
                        cellctr[0] = lo[0] + (sx + 0.5) * side / steps;
                        cellctr[1] = lo[1] + (sy + 0.5) * side / steps;
                        Anchor a{static_cast<i64>(std::floor(cellctr[0] / h)),
                                 static_cast<i64>(std::floor(cellctr[1] / h)), 0, 0};
                        sum += f.value_at(a) * (side / steps) * (side / steps);
                    }
                }
            }
            const double avg = dim == 1 ? sum / side : sum / (side * side);
            // a point inside R (center), with Riemann-level tolerance on avg
            Anchor cell{};
            for (int i = 0; i < dim; ++i)
                cell[i] = static_cast<i64>(std::floor((lo[i] + 0.5 * side) / h));
            const double mhat = mf.value_at(cell);
            CHECK(avg <= three_pow * mhat * 1.05 + 1e-9);
        }
    }
}
