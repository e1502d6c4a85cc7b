#include <random>

#include "czsparse/corpus.hpp"
#include "czsparse/whitney.hpp"
#include "doctest.h"

using namespace czsparse;

namespace {
Region interval_region(int grid_level, i64 lo, i64 hi) {
    std::vector<Anchor> cells;
    for (i64 a = lo; a < hi; ++a) cells.push_back(Anchor{a, 0, 0, 0});
    return make_region(1, grid_level, std::move(cells));
}
}  // namespace

TEST_CASE("empty region gives an empty cover") {
    const auto sc = scale_constants(1);
    const auto cover = whitney_decompose(make_region(1, 0, {}), sc, -4);
    CHECK(cover.cubes.empty());
    CHECK(cover.frontier.empty());
    CHECK(verify_cover(cover).all_ok());
}

TEST_CASE("unit interval cover contains the expected boundary cube") {
    // Omega = (0,1) as 8 cells at level -3, decomposed down to level -10.
    const auto sc = scale_constants(1);
    REQUIRE(sc.c_w == Rational(36));
    const Region omega = interval_region(-3, 0, 8);
    const auto cover = whitney_decompose(omega, sc, -10);

    const DyadicCube probe(1, -7, Anchor{64, 0, 0, 0});  // [1/2, 1/2 + 2^-7)
    bool found = false;
    for (const auto& q : cover.cubes) found = found || q == probe;
    CHECK(found);

    // its exact distance to the complement is 63/128, inside [35/128, 72/128]
    const auto d = dist2_to_complement(omega, probe);
    CHECK(d.unit_level == -7);
    CHECK(d.dist2 == 3969);  // (63/128)^2 = 3969 * 4^-7
    CHECK(ge_cw_minus_sqrtd_squared(Rational(3969), sc.c_w, 1, Rational(1)));
    CHECK(i128{3969} <= i128{4} * 36 * 36 * 1);  // dist^2 <= (2 C_W l)^2

    const auto chk = verify_cover(cover);
    CHECK(chk.all_ok());
    CHECK(chk.n_cmp <= 2);
}

TEST_CASE("random regions: every emitted cube certified, coverage exact") {
    for (int trial = 0; trial < 12; ++trial) {
        const int dim = 1 + trial % 2;
        const auto sc = scale_constants(dim);
        const Region omega = random_region(dim, -6, 555 + trial, dim == 1 ? 600 : 900);
        const auto cover = whitney_decompose(omega, sc, -6);
        const auto chk = verify_cover(cover);
        CHECK(chk.lower_bound_ok);
        CHECK(chk.upper_bound_ok);
        CHECK(chk.dilation_ok);
        CHECK(chk.disjoint_ok);
        CHECK(chk.coverage_ok);
        CHECK(chk.frontier_ok);
    }
}

TEST_CASE("lowering the floor only refines the frontier") {
    const auto sc = scale_constants(1);
    const Region omega = interval_region(-3, 0, 8);
    const auto coarse = whitney_decompose(omega, sc, -8);
    const auto fine = whitney_decompose(omega, sc, -11);
    // every cube of the coarse cover appears in the fine cover
    for (const auto& q : coarse.cubes) {
        bool found = false;
        for (const auto& p : fine.cubes) found = found || p == q;
        CHECK(found);
    }
    CHECK(fine.cubes.size() >= coarse.cubes.size());
    // frontier mass shrinks with the floor
    CHECK(ldexpl(static_cast<long double>(fine.frontier.size()), fine.s_floor) <=
          ldexpl(static_cast<long double>(coarse.frontier.size()), coarse.s_floor));
}

TEST_CASE("frontier cubes hug the boundary") {
    const auto sc = scale_constants(1);
    const Region omega = interval_region(0, 0, 300);
    const auto cover = whitney_decompose(omega, sc, 0);
    const auto chk = verify_cover(cover);
    CHECK(chk.all_ok());
    // every frontier cell is within (C_W - sqrt d) * 2^floor of the complement,
    // hence within 2 C_W 2^floor as the module states
    for (const auto& q : cover.frontier) {
        const auto d = dist2_to_complement(omega, q);
        CHECK_FALSE(ge_cw_minus_sqrtd_squared(Rational(static_cast<i64>(d.dist2)), sc.c_w, 1,
                                              Rational(1)));
    }
    CHECK(cover.frontier.size() >= 2);  // both ends of the interval
}

TEST_CASE("floor above the grid is rejected") {
    const auto sc = scale_constants(1);
    CHECK_THROWS(whitney_decompose(interval_region(-3, 0, 8), sc, -2));
}
