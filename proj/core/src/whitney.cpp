#include "czsparse/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_set>

namespace czsparse {

namespace {

inline i64 div_floor(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Smallest integer T (in units 4^u) with T >= (C_W - sqrt(d))^2 * l2.
// An integer threshold makes the candidate test a pure integer comparison.
i64 candidate_threshold(const Rational& cw, int d, i64 l2) {
    const long double cwd = static_cast<long double>(cw.num) / cw.den - sqrtl((long double)d);
    i64 t = static_cast<i64>(ceill(cwd * cwd * static_cast<long double>(l2)));
    while (t > 0 && ge_cw_minus_sqrtd_squared(Rational(t - 1), cw, d, Rational(l2))) --t;
    while (!ge_cw_minus_sqrtd_squared(Rational(t), cw, d, Rational(l2))) ++t;
    return t;
}

struct Builder {
    const Region& omega;
    const ScaleConstants& sc;
    const RegionIndex idx;
    int u;        // arithmetic unit level
    int g;        // grid level
    i64 f_cell;   // 2^(g-u)
    i64 span;     // max bbox extent, cells
    std::vector<DyadicCube> cubes, frontier;
    std::map<int, i64> thresholds;  // per cube level

    Builder(const Region& om, const ScaleConstants& s, int floor_level)
        : omega(om), sc(s), idx(om), u(floor_level), g(om.grid_level) {
        f_cell = GridBox::i64ptwo(g - u);
    }

    i64 threshold(int level) {
        auto it = thresholds.find(level);
        if (it != thresholds.end()) return it->second;
        const int e = 2 * (level - u);
        if (e > 60) throw std::overflow_error("whitney_decompose: region too large for exact arithmetic");
        const i64 t = candidate_threshold(sc.c_w, omega.dim, i64{1} << e);
        thresholds.emplace(level, t);
        return t;
    }

    void box_units(const DyadicCube& q, Anchor& blo, Anchor& bhi) const {
        const i64 w = GridBox::i64ptwo(q.level - u);
        for (int i = 0; i < q.dim; ++i) {
            blo[i] = q.anchor[i] * w;
            bhi[i] = blo[i] + w;
        }
    }

    bool meets_omega(const DyadicCube& q) const {
        Anchor blo{}, bhi{}, rlo{}, rhi{};
        box_units(q, blo, bhi);
        for (int i = 0; i < q.dim; ++i) {
            rlo[i] = div_floor(blo[i], f_cell);
            rhi[i] = -div_floor(-bhi[i], f_cell);
        }
        return idx.rect_meets(rlo, rhi);
    }

    bool is_candidate(const DyadicCube& q) {
        // cubes at least twice the bounding span cannot sit inside the region
        if (q.level - g >= 0 && GridBox::i64ptwo(std::min(q.level - g, 40)) >= 2 * span)
            return false;
        Anchor blo{}, bhi{};
        box_units(q, blo, bhi);
        return idx.dist2_box_at_least(blo, bhi, f_cell, threshold(q.level));
    }

    void visit(const DyadicCube& q) {
        if (!meets_omega(q)) return;
        if (is_candidate(q)) {
            cubes.push_back(q);
            return;
        }
        if (q.level > u) {
            for (int c = 0; c < q.num_children(); ++c) visit(q.child(c));
        } else {
            frontier.push_back(q);
        }
    }
};

}  // namespace

WhitneyCover whitney_decompose(const Region& omega, const ScaleConstants& sc, int s_floor) {
    if (sc.dim != omega.dim) throw std::invalid_argument("whitney_decompose: dimension mismatch");
    if (s_floor > omega.grid_level)
        throw std::invalid_argument(
            "whitney_decompose: s_floor must not exceed the grid level (frontier must refine the grid)");
    WhitneyCover cover;
    cover.region = omega;
    cover.constants = sc;
    cover.s_floor = s_floor;
    if (omega.empty()) return cover;

    Builder b(omega, sc, s_floor);
    const auto bbox = *omega.bounding_rect();
    b.span = 0;
    for (int i = 0; i < omega.dim; ++i) b.span = std::max(b.span, bbox.hi[i] - bbox.lo[i]);
    if (b.span > (i64{1} << 20) || omega.grid_level - s_floor > 8)
        throw std::overflow_error("whitney_decompose: domain exceeds exact-arithmetic budget");

    int top = omega.grid_level;
    while (GridBox::i64ptwo(top - omega.grid_level) < 2 * b.span) ++top;
    const i64 tile = GridBox::i64ptwo(top - omega.grid_level);
    Anchor tlo{}, thi{};
    for (int i = 0; i < omega.dim; ++i) {
        tlo[i] = div_floor(bbox.lo[i], tile);
        thi[i] = div_floor(bbox.hi[i] - 1, tile) + 1;
    }
    if (omega.dim == 1) {
        for (i64 a = tlo[0]; a < thi[0]; ++a) b.visit(DyadicCube(1, top, Anchor{a, 0, 0, 0}));
    } else {
        for (i64 a0 = tlo[0]; a0 < thi[0]; ++a0)
            for (i64 a1 = tlo[1]; a1 < thi[1]; ++a1)
                b.visit(DyadicCube(2, top, Anchor{a0, a1, 0, 0}));
    }
    std::sort(b.cubes.begin(), b.cubes.end(), cube_less);
    std::sort(b.frontier.begin(), b.frontier.end(), cube_less);
    cover.cubes = std::move(b.cubes);
    cover.frontier = std::move(b.frontier);
    return cover;
}

i128 WhitneyCover::covered_units() const {
    const int u = std::min(s_floor, region.grid_level);
    i128 total = 0;
    for (const auto& q : cubes) {
        i128 m = 1;
        for (int i = 0; i < q.dim; ++i) m *= GridBox::i64ptwo(q.level - u);
        total += m;
    }
    for (const auto& q : frontier) {
        i128 m = 1;
        for (int i = 0; i < q.dim; ++i) m *= GridBox::i64ptwo(q.level - u);
        total += m;
    }
    return total;
}

namespace {

// pack a cube for hashing; coordinates stay well inside 2^24 here
inline std::uint64_t pack_cube(const DyadicCube& q) {
    std::uint64_t h = static_cast<std::uint64_t>(q.level + 128);
    for (int i = 0; i < q.dim; ++i)
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(q.anchor[i] + (i64{1} << 40));
    return h;
}

}  // namespace

CoverCheck verify_cover(const WhitneyCover& cover, bool measure_comparability) {
    CoverCheck chk;
    const Region& omega = cover.region;
    if (omega.empty()) {
        chk.coverage_ok = cover.cubes.empty() && cover.frontier.empty();
        return chk;
    }
    const int u = std::min(cover.s_floor, omega.grid_level);
    const i64 f_cell = GridBox::i64ptwo(omega.grid_level - u);
    RegionIndex idx(omega);
    const Rational& cw = cover.constants.c_w;
    const int d = omega.dim;

    std::unordered_set<std::uint64_t> emitted;
    for (const auto& q : cover.cubes) emitted.insert(pack_cube(q));

    int top_level = cover.s_floor;
    for (const auto& q : cover.cubes) top_level = std::max(top_level, q.level);

    auto ancestor_clash = [&](DyadicCube q) {
        while (q.level <= top_level + 1) {
            q = q.parent();
            if (emitted.count(pack_cube(q))) return true;
        }
        return false;
    };

    for (const auto& q : cover.cubes) {
        ++chk.checked;
        Anchor blo{}, bhi{};
        const i64 w = GridBox::i64ptwo(q.level - u);
        for (int i = 0; i < d; ++i) {
            blo[i] = q.anchor[i] * w;
            bhi[i] = blo[i] + w;
        }
        const i128 d2 = idx.dist2_box(blo, bhi, f_cell);
        if (d2 > std::numeric_limits<i64>::max())
            throw std::overflow_error("verify_cover: distance out of range");
        const i64 dist2 = static_cast<i64>(d2);
        const i64 l2 = w * w;
        if (!ge_cw_minus_sqrtd_squared(Rational(dist2), cw, d, Rational(l2)))
            chk.lower_bound_ok = false;
        // dist^2 <= 4 C_W^2 l^2, rationals cleared
        if (static_cast<i128>(dist2) * cw.den * cw.den >
            4 * static_cast<i128>(cw.num) * cw.num * l2)
            chk.upper_bound_ok = false;
        if (!box_inside_region(dilate_double(q, cover.constants.lambda_d), omega))
            chk.dilation_ok = false;
        if (ancestor_clash(q)) chk.disjoint_ok = false;
    }

    for (const auto& q : cover.frontier) {
        if (q.level != cover.s_floor) chk.frontier_ok = false;
        if (!box_inside_region(box_of_cube(q), omega)) chk.frontier_ok = false;
        if (emitted.count(pack_cube(q)) || ancestor_clash(q)) chk.disjoint_ok = false;
        // a frontier cube must have failed the candidate test at the floor
        Anchor blo{}, bhi{};
        const i64 w = GridBox::i64ptwo(q.level - u);
        for (int i = 0; i < d; ++i) {
            blo[i] = q.anchor[i] * w;
            bhi[i] = blo[i] + w;
        }
        const i128 d2 = idx.dist2_box(blo, bhi, f_cell);
        if (d2 <= std::numeric_limits<i64>::max() &&
            ge_cw_minus_sqrtd_squared(Rational(static_cast<i64>(d2)), cw, d, Rational(w * w)))
            chk.frontier_ok = false;
    }

    // exact coverage: disjoint pieces inside Omega summing to |Omega|
    i128 per_cell = 1;
    for (int i = 0; i < d; ++i) per_cell *= f_cell;
    if (cover.covered_units() != static_cast<i128>(omega.cell_count()) * per_cell)
        chk.coverage_ok = false;

    if (measure_comparability) {
        std::vector<GridBox> dil;
        dil.reserve(cover.cubes.size());
        for (const auto& q : cover.cubes) dil.push_back(dilate(q, cover.constants.lambda_d));
        for (size_t i = 0; i < dil.size(); ++i)
            for (size_t j = i + 1; j < dil.size(); ++j)
                if (dil[i].intersects(dil[j]))
                    chk.n_cmp = std::max(
                        chk.n_cmp, std::abs(cover.cubes[i].level - cover.cubes[j].level));
    }
    return chk;
}

}  // namespace czsparse
