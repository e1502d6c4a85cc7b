#include "czsparse/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace czsparse {

namespace {

inline i64 div_floor(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline i64 div_ceil(i64 a, i64 b) { return -div_floor(-a, b); }

bool anchor_less(const Anchor& a, const Anchor& b) { return a < b; }

}  // namespace

long double Region::measure() const {
    return ldexpl(static_cast<long double>(cells.size()), dim * grid_level);
}

bool Region::contains_cell(const Anchor& a) const {
    return std::binary_search(cells.begin(), cells.end(), a, anchor_less);
}

std::optional<Region::Rect> Region::bounding_rect() const {
    if (cells.empty()) return std::nullopt;
    Rect r;
    for (int i = 0; i < dim; ++i) {
        r.lo[i] = cells.front()[i];
        r.hi[i] = cells.front()[i] + 1;
    }
    for (const auto& c : cells)
        for (int i = 0; i < dim; ++i) {
            r.lo[i] = std::min(r.lo[i], c[i]);
            r.hi[i] = std::max(r.hi[i], c[i] + 1);
        }
    return r;
}

Region make_region(int dim, int grid_level, std::vector<Anchor> cells) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("make_region: bad dimension");
    for (auto& c : cells)
        for (int i = dim; i < kMaxDim; ++i) c[i] = 0;
    std::sort(cells.begin(), cells.end(), anchor_less);
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    Region r;
    r.dim = dim;
    r.grid_level = grid_level;
    r.cells = std::move(cells);
    return r;
}

static void check_compatible(const Region& a, const Region& b) {
    if (a.dim != b.dim || a.grid_level != b.grid_level)
        throw std::invalid_argument("regions live on different grids");
}

Region region_union(const Region& a, const Region& b) {
    check_compatible(a, b);
    std::vector<Anchor> out;
    out.reserve(a.cells.size() + b.cells.size());
    std::set_union(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                   std::back_inserter(out), anchor_less);
    Region r;
    r.dim = a.dim;
    r.grid_level = a.grid_level;
    r.cells = std::move(out);
    return r;
}

Region region_intersection(const Region& a, const Region& b) {
    check_compatible(a, b);
    std::vector<Anchor> out;
    std::set_intersection(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                          std::back_inserter(out), anchor_less);
    Region r;
    r.dim = a.dim;
    r.grid_level = a.grid_level;
    r.cells = std::move(out);
    return r;
}

Region region_difference(const Region& a, const Region& b) {
    check_compatible(a, b);
    std::vector<Anchor> out;
    std::set_difference(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                        std::back_inserter(out), anchor_less);
    Region r;
    r.dim = a.dim;
    r.grid_level = a.grid_level;
    r.cells = std::move(out);
    return r;
}

bool regions_disjoint(const Region& a, const Region& b) {
    check_compatible(a, b);
    auto ia = a.cells.begin();
    auto ib = b.cells.begin();
    while (ia != a.cells.end() && ib != b.cells.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

Region clip_to_box(const Region& r, const GridBox& box) {
    const int u = std::min(box.level, r.grid_level);
    const i64 f_box = GridBox::i64ptwo(box.level - u);
    const i64 f_cell = GridBox::i64ptwo(r.grid_level - u);
    std::vector<Anchor> kept;
    for (const auto& c : r.cells) {
        bool inside = true;
        for (int i = 0; i < r.dim && inside; ++i) {
            const i64 lo = box.lo[i] * f_box, hi = (box.lo[i] + box.width) * f_box;
            inside = c[i] * f_cell >= lo && (c[i] + 1) * f_cell <= hi;
        }
        if (inside) kept.push_back(c);
    }
    Region out;
    out.dim = r.dim;
    out.grid_level = r.grid_level;
    out.cells = std::move(kept);
    return out;
}

bool box_inside_region(const GridBox& box, const Region& r) {
    if (r.empty()) return false;
    const int u = std::min(box.level, r.grid_level);
    const i64 f_box = GridBox::i64ptwo(box.level - u);
    const i64 f_cell = GridBox::i64ptwo(r.grid_level - u);
    Anchor lo{}, hi{};
    for (int i = 0; i < r.dim; ++i) {
        lo[i] = div_floor(box.lo[i] * f_box, f_cell);
        hi[i] = div_ceil((box.lo[i] + box.width) * f_box, f_cell);
    }
    RegionIndex idx(r);
    return idx.rect_full(lo, hi);
}

std::vector<Anchor> cells_of_cube_in_region(const Region& r, const DyadicCube& q) {
    std::vector<Anchor> out;
    if (q.level < r.grid_level) return out;  // sub-cell cubes never hold whole cells
    const i64 f = GridBox::i64ptwo(q.level - r.grid_level);
    Anchor lo{}, hi{};
    for (int i = 0; i < r.dim; ++i) {
        lo[i] = q.anchor[i] * f;
        hi[i] = (q.anchor[i] + 1) * f;
    }
    if (r.dim == 1) {
        auto it = std::lower_bound(r.cells.begin(), r.cells.end(), Anchor{lo[0], 0, 0, 0});
        for (; it != r.cells.end() && (*it)[0] < hi[0]; ++it) out.push_back(*it);
    } else {
        for (i64 row = lo[0]; row < hi[0]; ++row) {
            auto it = std::lower_bound(r.cells.begin(), r.cells.end(), Anchor{row, lo[1], 0, 0});
            for (; it != r.cells.end() && (*it)[0] == row && (*it)[1] < hi[1]; ++it)
                out.push_back(*it);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// RegionIndex

RegionIndex::RegionIndex(const Region& r) : region_(&r) {
    if (r.dim > 2)
        throw std::invalid_argument("RegionIndex: only d=1,2 carry region geometry");
    if (auto bb = r.bounding_rect()) bbox_ = *bb;
    if (r.dim == 1) {
        for (const auto& c : r.cells) {
            if (!intervals_.empty() && intervals_.back().second == c[0])
                intervals_.back().second = c[0] + 1;
            else
                intervals_.emplace_back(c[0], c[0] + 1);
        }
    } else {
        for (const auto& c : r.cells) {
            if (rows_.empty() || rows_.back() != c[0]) {
                rows_.push_back(c[0]);
                row_intervals_.emplace_back();
            }
            auto& iv = row_intervals_.back();
            if (!iv.empty() && iv.back().second == c[1])
                iv.back().second = c[1] + 1;
            else
                iv.emplace_back(c[1], c[1] + 1);
        }
    }
}

namespace {
// interval list helpers on merged, sorted [lo, hi) pairs
bool intervals_cover(const std::vector<std::pair<i64, i64>>& iv, i64 c0, i64 c1) {
    auto it = std::upper_bound(iv.begin(), iv.end(), c0,
                               [](i64 v, const std::pair<i64, i64>& p) { return v < p.first; });
    if (it == iv.begin()) return false;
    --it;
    return it->first <= c0 && it->second >= c1;
}
bool intervals_meet(const std::vector<std::pair<i64, i64>>& iv, i64 c0, i64 c1) {
    auto it = std::upper_bound(iv.begin(), iv.end(), c0,
                               [](i64 v, const std::pair<i64, i64>& p) { return v < p.first; });
    if (it != iv.end() && it->first < c1) return true;
    if (it == iv.begin()) return false;
    --it;
    return it->second > c0;
}
}  // namespace

bool RegionIndex::row_full(i64 row, i64 c0, i64 c1) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
    if (it == rows_.end() || *it != row) return false;
    return intervals_cover(row_intervals_[it - rows_.begin()], c0, c1);
}

bool RegionIndex::row_meets(i64 row, i64 c0, i64 c1) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
    if (it == rows_.end() || *it != row) return false;
    return intervals_meet(row_intervals_[it - rows_.begin()], c0, c1);
}

bool RegionIndex::contains_cell(const Anchor& a) const {
    if (region_->dim == 1) return intervals_cover(intervals_, a[0], a[0] + 1);
    return row_full(a[0], a[1], a[1] + 1);
}

bool RegionIndex::rect_full(const Anchor& lo, const Anchor& hi) const {
    for (int i = 0; i < region_->dim; ++i)
        if (lo[i] >= hi[i]) return true;  // empty rect
    if (region_->dim == 1) return intervals_cover(intervals_, lo[0], hi[0]);
    for (i64 row = lo[0]; row < hi[0]; ++row)
        if (!row_full(row, lo[1], hi[1])) return false;
    return true;
}

bool RegionIndex::rect_meets(const Anchor& lo, const Anchor& hi) const {
    for (int i = 0; i < region_->dim; ++i)
        if (lo[i] >= hi[i]) return false;
    if (region_->dim == 1) return intervals_meet(intervals_, lo[0], hi[0]);
    for (i64 row = lo[0]; row < hi[0]; ++row)
        if (row_meets(row, lo[1], hi[1])) return true;
    return false;
}

i128 RegionIndex::dist2_box(const Anchor& blo, const Anchor& bhi, i64 cell_scale) const {
    const Region& r = *region_;
    const int d = r.dim;
    const i64 f = cell_scale;

    Anchor rlo{}, rhi{};
    for (int i = 0; i < d; ++i) {
        rlo[i] = div_floor(blo[i], f);
        rhi[i] = div_ceil(bhi[i], f);
    }
    if (!rect_full(rlo, rhi)) return 0;

    // initial bound: straight-line distance to the complement of the bounding
    // rectangle (everything outside it is complement)
    i64 gap_out = std::numeric_limits<i64>::max();
    for (int i = 0; i < d; ++i) {
        gap_out = std::min(gap_out, blo[i] - bbox_.lo[i] * f);
        gap_out = std::min(gap_out, bbox_.hi[i] * f - bhi[i]);
    }
    if (gap_out <= 0) return 0;
    i128 best2 = static_cast<i128>(gap_out) * gap_out;

    auto consider = [&](const Anchor& c) {
        if (contains_cell(c)) return;
        i128 d2 = 0;
        for (int i = 0; i < d; ++i) {
            const i64 g = std::max<i64>({blo[i] - (c[i] + 1) * f, c[i] * f - bhi[i], 0});
            d2 += static_cast<i128>(g) * g;
        }
        best2 = std::min(best2, d2);
    };

    for (i64 gamma = 0;; ++gamma) {
        const i128 ring_min = static_cast<i128>(gamma) * f * gamma * f;
        if (ring_min >= best2) break;
        if (d == 1) {
            consider(Anchor{rlo[0] - 1 - gamma, 0, 0, 0});
            consider(Anchor{rhi[0] + gamma, 0, 0, 0});
        } else {
            const i64 x0 = rlo[0] - 1 - gamma, x1 = rhi[0] + gamma;
            const i64 y0 = rlo[1] - 1 - gamma, y1 = rhi[1] + gamma;
            for (i64 y = y0; y <= y1; ++y) {
                consider(Anchor{x0, y, 0, 0});
                consider(Anchor{x1, y, 0, 0});
            }
            for (i64 x = x0 + 1; x < x1; ++x) {
                consider(Anchor{x, y0, 0, 0});
                consider(Anchor{x, y1, 0, 0});
            }
        }
    }
    return best2;
}

bool RegionIndex::dist2_box_at_least(const Anchor& blo, const Anchor& bhi, i64 cell_scale,
                                     i128 threshold) const {
    if (threshold <= 0) return true;
    const Region& r = *region_;
    const int d = r.dim;
    const i64 f = cell_scale;

    Anchor rlo{}, rhi{};
    for (int i = 0; i < d; ++i) {
        rlo[i] = div_floor(blo[i], f);
        rhi[i] = div_ceil(bhi[i], f);
    }
    if (!rect_full(rlo, rhi)) return false;

    i64 gap_out = std::numeric_limits<i64>::max();
    for (int i = 0; i < d; ++i) {
        gap_out = std::min(gap_out, blo[i] - bbox_.lo[i] * f);
        gap_out = std::min(gap_out, bbox_.hi[i] * f - bhi[i]);
    }
    if (gap_out <= 0) return false;
    i128 best2 = static_cast<i128>(gap_out) * gap_out;
    if (best2 < threshold) return false;

    auto consider = [&](const Anchor& c) {
        if (contains_cell(c)) return;
        i128 d2 = 0;
        for (int i = 0; i < d; ++i) {
            const i64 g = std::max<i64>({blo[i] - (c[i] + 1) * f, c[i] * f - bhi[i], 0});
            d2 += static_cast<i128>(g) * g;
        }
        best2 = std::min(best2, d2);
    };

    for (i64 gamma = 0;; ++gamma) {
        const i128 ring_min = static_cast<i128>(gamma) * f * gamma * f;
        if (ring_min >= threshold) return true;
        if (ring_min >= best2) break;
        if (d == 1) {
            consider(Anchor{rlo[0] - 1 - gamma, 0, 0, 0});
            consider(Anchor{rhi[0] + gamma, 0, 0, 0});
        } else {
            const i64 x0 = rlo[0] - 1 - gamma, x1 = rhi[0] + gamma;
            const i64 y0 = rlo[1] - 1 - gamma, y1 = rhi[1] + gamma;
            for (i64 y = y0; y <= y1; ++y) {
                consider(Anchor{x0, y, 0, 0});
                consider(Anchor{x1, y, 0, 0});
            }
            for (i64 x = x0 + 1; x < x1; ++x) {
                consider(Anchor{x, y0, 0, 0});
                consider(Anchor{x, y1, 0, 0});
            }
        }
        if (best2 < threshold) return false;
    }
    return best2 >= threshold;
}

ComplementDistance dist2_to_complement(const Region& r, const GridBox& box) {
    ComplementDistance out;
    out.unit_level = std::min(box.level, r.grid_level);
    if (r.empty()) {
        out.omega_empty = true;
        out.dist2 = 0;
        return out;
    }
    const i64 f_box = GridBox::i64ptwo(box.level - out.unit_level);
    Anchor blo{}, bhi{};
    for (int i = 0; i < r.dim; ++i) {
        blo[i] = box.lo[i] * f_box;
        bhi[i] = (box.lo[i] + box.width) * f_box;
    }
    RegionIndex idx(r);
    out.dist2 = idx.dist2_box(blo, bhi, GridBox::i64ptwo(r.grid_level - out.unit_level));
    return out;
}

ComplementDistance dist2_to_complement(const Region& r, const DyadicCube& q) {
    return dist2_to_complement(r, box_of_cube(q));
}

}  // namespace czsparse
