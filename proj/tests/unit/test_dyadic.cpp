#include <random>

#include "czsparse/dyadic.hpp"
#include "doctest.h"

using namespace czsparse;

TEST_CASE("scale constants match the defining inequalities") {
    const auto c1 = scale_constants(1);
    CHECK(c1.k_d == 2);
    CHECK(c1.lambda_d == 17);
    CHECK(c1.c_w == Rational(36));  // ceil(sqrt(1)*35) + 1

    const auto c2 = scale_constants(2);
    CHECK(c2.k_d == 2);
    CHECK(c2.lambda_d == 17);
    CHECK(c2.c_w == Rational(51));  // ceil(sqrt(2)*35) + 1 = 51

    const auto c4 = scale_constants(4);
    CHECK(c4.k_d == 3);
    CHECK(c4.lambda_d == 33);

    // invariants: 4^(k-1) > d but 4^(k-2) <= d; c_w > sqrt(d)(2 lambda + 1)
    for (int d = 1; d <= 4; ++d) {
        const auto sc = scale_constants(d);
        CHECK((i64{1} << (2 * (sc.k_d - 1))) > d);
        if (sc.k_d > 1) CHECK((i64{1} << (2 * (sc.k_d - 2))) <= d);
        CHECK(sc.lambda_d == (i64{1} << (sc.k_d + 2)) + 1);
        CHECK(cmp_rational_minus_sqrt(sc.c_w, Rational(2 * sc.lambda_d + 1), d) > 0);
    }
    CHECK(scale_constants(1, Rational(3, 2)).c_w == Rational(54));
    CHECK_THROWS(scale_constants(0));
}

TEST_CASE("dilation realizes lambda Q on the grid") {
    const DyadicCube q1(1, 0, Anchor{0, 0, 0, 0});
    const GridBox b17 = dilate(q1, 17);
    CHECK(b17.level == 0);
    CHECK(b17.lo[0] == -8);
    CHECK(b17.width == 17);  // [-8, 9)

    const DyadicCube q2(2, 0, Anchor{0, 0, 0, 0});
    const GridBox b3 = dilate(q2, 3);
    CHECK(b3.lo[0] == -1);
    CHECK(b3.lo[1] == -1);
    CHECK(b3.width == 3);  // [-1, 2)^2

    const GridBox b1 = dilate(q1, 1);
    CHECK(b1.lo[0] == q1.anchor[0]);
    CHECK(b1.width == 1);

    CHECK_THROWS(dilate(q1, 2));
    CHECK_THROWS(dilate(q1, -3));

    // 2*lambda*Q sits one level down with the right span
    const GridBox d2 = dilate_double(q1, 17);
    CHECK(d2.level == -1);
    CHECK(d2.lo[0] == 1 - 34);
    CHECK(d2.width == 68);  // side 34 at level -1 = 2*17 cells of level 0

    // a dilated cube decomposes into lambda^d level-s cells
    i64 cells = 1;
    for (int i = 0; i < q2.dim; ++i) cells *= b3.width;
    CHECK(cells == 9);
}

TEST_CASE("parent/child structure partitions exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 2);
        Anchor a{};
        for (int i = 0; i < dim; ++i) a[i] = static_cast<i64>(rng() % 2048) - 1024;
        const DyadicCube q(dim, static_cast<int>(rng() % 10) - 5, a);
        for (int c = 0; c < q.num_children(); ++c) {
            CHECK(q.child(c).parent() == q);
            CHECK(q.child(c).contained_in(q));
        }
        // children are pairwise disjoint
        for (int c = 0; c < q.num_children(); ++c)
            for (int c2 = c + 1; c2 < q.num_children(); ++c2)
                CHECK(q.child(c).disjoint_from(q.child(c2)));
    }
}

TEST_CASE("nesting trichotomy") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 2);
        Anchor a{}, b{};
        for (int i = 0; i < dim; ++i) {
            a[i] = static_cast<i64>(rng() % 64) - 32;
            b[i] = static_cast<i64>(rng() % 64) - 32;
        }
        const DyadicCube p(dim, static_cast<int>(rng() % 6) - 3, a);
        const DyadicCube q(dim, static_cast<int>(rng() % 6) - 3, b);
        const int ways = (p.contained_in(q) ? 1 : 0) + (q.contained_in(p) ? 1 : 0) +
                         (p.disjoint_from(q) ? 1 : 0);
        if (p == q)
            CHECK(ways == 2);  // contained both ways, not disjoint
        else
            CHECK(ways == 1);
    }
}

TEST_CASE("scale index") {
    const int k1 = scale_constants(1).k_d;
    CHECK(scale_index(DyadicCube(1, 0, Anchor{0, 0, 0, 0}), k1) == 2);
    CHECK(scale_index(DyadicCube(1, -3, Anchor{0, 0, 0, 0}), k1) == -1);
    const int k4 = scale_constants(4).k_d;
    CHECK(scale_index(DyadicCube(4, 1, Anchor{0, 0, 0, 0}), k4) == 4);
}

TEST_CASE("annulus membership is exact on lattice points") {
    const auto sc = scale_constants(1);
    const DyadicCube q0(1, 0, Anchor{0, 0, 0, 0});
    const Annulus a = annulus(q0, 3, sc.k_d);
    // {x: |x - 1/2| in [2, 32]}; points in units 2^-1 (center level)
    CHECK(a.contains_point(Anchor{1 + 4, 0, 0, 0}, -1));       // x = 5/2, |x-1/2| = 2
    CHECK(a.contains_point(Anchor{1 + 64, 0, 0, 0}, -1));      // x = 65/2, |x-1/2| = 32
    CHECK_FALSE(a.contains_point(Anchor{1 + 3, 0, 0, 0}, -1)); // 3/2 < 2
    CHECK_FALSE(a.contains_point(Anchor{1 + 65, 0, 0, 0}, -1));
    CHECK_FALSE(a.contains_point(Anchor{1, 0, 0, 0}, -1));     // the center itself

    CHECK_THROWS(annulus(q0, scale_index(q0, sc.k_d), sc.k_d));

    // sampled agreement with the direct inequality in d=2
    const auto sc2 = scale_constants(2);
    const DyadicCube q2(2, 0, Anchor{0, 0, 0, 0});
    const Annulus a2 = annulus(q2, 4, sc2.k_d);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        Anchor p{};
        for (int i = 0; i < 2; ++i) p[i] = static_cast<i64>(rng() % 400) - 200;
        const double x = static_cast<double>(p[0]) * 0.5, y = static_cast<double>(p[1]) * 0.5;
        const double dx = x - 0.5, dy = y - 0.5;
        const double r = std::sqrt(dx * dx + dy * dy);
        const bool expect = r >= std::ldexp(1.0, 4 - 2) && r <= std::ldexp(1.0, sc2.k_d + 4);
        CHECK(a2.contains_point(p, -1) == expect);
    }
}
