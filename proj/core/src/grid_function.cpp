#include "czsparse/grid_function.hpp"

#include <algorithm>
#include <cmath>

namespace czsparse {

namespace {
inline i64 div_floor(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long double neumaier_sum(const std::vector<double>& v, bool absolute) {
    long double s = 0.0L, c = 0.0L;
    for (double raw : v) {
        const long double x = absolute ? fabsl((long double)raw) : (long double)raw;
        const long double t = s + x;
        if (fabsl(s) >= fabsl(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}
}  // namespace

GridFunction::GridFunction(int dim, int grid_level, const GridBox& window,
                           std::vector<double> values)
    : dim_(dim), grid_level_(grid_level), window_(window), values_(std::move(values)) {
    if (window.level != grid_level)
        throw std::invalid_argument("GridFunction: window must live on the grid lattice");
    i64 n = 1;
    for (int i = 0; i < dim; ++i) n *= window.width;
    if (static_cast<i64>(values_.size()) != n)
        throw std::invalid_argument("GridFunction: value count does not match window");
    for (double v : values_)
        if (std::isnan(v)) throw std::invalid_argument("GridFunction: NaN value");
}

i64 GridFunction::flat(const Anchor& cell) const {
    i64 idx = 0;
    for (int i = 0; i < dim_; ++i) idx = idx * window_.width + (cell[i] - window_.lo[i]);
    return idx;
}

Anchor GridFunction::unflat(i64 index) const {
    Anchor a{};
    for (int i = dim_ - 1; i >= 0; --i) {
        a[i] = window_.lo[i] + index % window_.width;
        index /= window_.width;
    }
    return a;
}

double GridFunction::value_at(const Anchor& cell) const {
    for (int i = 0; i < dim_; ++i)
        if (cell[i] < window_.lo[i] || cell[i] >= window_.lo[i] + window_.width) return 0.0;
    return values_[flat(cell)];
}

long double GridFunction::cell_measure() const { return ldexpl(1.0L, dim_ * grid_level_); }

long double GridFunction::integral() const { return neumaier_sum(values_, false) * cell_measure(); }

long double GridFunction::norm_l1() const { return neumaier_sum(values_, true) * cell_measure(); }

double GridFunction::norm_sup() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool GridFunction::is_zero() const {
    for (double v : values_)
        if (v != 0.0) return false;
    return true;
}

bool GridFunction::nonnegative() const {
    for (double v : values_)
        if (v < 0.0) return false;
    return true;
}

const std::vector<long double>& GridFunction::prefix() const {
    if (!prefix_) {
        const i64 w = window_.width;
        if (dim_ == 1) {
            auto p = std::make_shared<std::vector<long double>>(w + 1, 0.0L);
            for (i64 i = 0; i < w; ++i) (*p)[i + 1] = (*p)[i] + values_[i];
            prefix_ = std::move(p);
        } else if (dim_ == 2) {
            auto p = std::make_shared<std::vector<long double>>((w + 1) * (w + 1), 0.0L);
            auto at = [&](i64 i, i64 j) -> long double& { return (*p)[i * (w + 1) + j]; };
            for (i64 i = 0; i < w; ++i)
                for (i64 j = 0; j < w; ++j)
                    at(i + 1, j + 1) =
                        at(i, j + 1) + at(i + 1, j) - at(i, j) + values_[i * w + j];
            prefix_ = std::move(p);
        } else {
            throw std::invalid_argument("GridFunction: prefix sums only for d=1,2");
        }
    }
    return *prefix_;
}

long double GridFunction::cell_sum(const Anchor& lo, const Anchor& hi) const {
    const i64 w = window_.width;
    Anchor a{}, b{};
    for (int i = 0; i < dim_; ++i) {
        a[i] = std::clamp<i64>(lo[i] - window_.lo[i], 0, w);
        b[i] = std::clamp<i64>(hi[i] - window_.lo[i], 0, w);
        if (a[i] >= b[i]) return 0.0L;
    }
    const auto& p = prefix();
    if (dim_ == 1) return p[b[0]] - p[a[0]];
    auto at = [&](i64 i, i64 j) { return p[i * (w + 1) + j]; };
    return at(b[0], b[1]) - at(a[0], b[1]) - at(b[0], a[1]) + at(a[0], a[1]);
}

GridFunction GridFunction::restrict_to_cube(const DyadicCube& q) const {
    if (q.level < grid_level_)
        throw std::invalid_argument("restrict_to_cube: cube finer than the grid");
    return restrict_to_box(box_of_cube(q));
}

GridFunction GridFunction::restrict_to_box(const GridBox& b) const {
    const int u = std::min(b.level, grid_level_);
    const i64 fb = GridBox::i64ptwo(b.level - u);
    const i64 fc = GridBox::i64ptwo(grid_level_ - u);
    std::vector<double> v(values_.size(), 0.0);
    for (i64 idx = 0; idx < num_cells(); ++idx) {
        if (values_[idx] == 0.0) continue;
        const Anchor c = unflat(idx);
        bool inside = true;
        for (int i = 0; i < dim_ && inside; ++i) {
            inside = c[i] * fc >= b.lo[i] * fb && (c[i] + 1) * fc <= (b.lo[i] + b.width) * fb;
        }
        if (inside) v[idx] = values_[idx];
    }
    return GridFunction(dim_, grid_level_, window_, std::move(v));
}

bool GridFunction::nonzero_on_cube(const DyadicCube& q) const {
    if (q.level < grid_level_) throw std::invalid_argument("nonzero_on_cube: cube finer than grid");
    const i64 f = GridBox::i64ptwo(q.level - grid_level_);
    Anchor lo{}, hi{};
    for (int i = 0; i < dim_; ++i) {
        lo[i] = q.anchor[i] * f;
        hi[i] = lo[i] + f;
    }
    return cell_sum(lo, hi) > 0.0L;
}

GridFunction GridFunction::refine_once() const {
    GridBox w(dim_, grid_level_ - 1, Anchor{}, window_.width * 2);
    for (int i = 0; i < dim_; ++i) w.lo[i] = window_.lo[i] * 2;
    std::vector<double> v;
    v.reserve(values_.size() * (size_t{1} << dim_));
    if (dim_ == 1) {
        v.resize(values_.size() * 2);
        for (i64 i = 0; i < num_cells(); ++i) v[2 * i] = v[2 * i + 1] = values_[i];
    } else {
        const i64 W = window_.width, W2 = 2 * W;
        v.resize(static_cast<size_t>(W2) * W2);
        for (i64 i = 0; i < W; ++i)
            for (i64 j = 0; j < W; ++j) {
                const double x = values_[i * W + j];
                v[(2 * i) * W2 + 2 * j] = x;
                v[(2 * i) * W2 + 2 * j + 1] = x;
                v[(2 * i + 1) * W2 + 2 * j] = x;
                v[(2 * i + 1) * W2 + 2 * j + 1] = x;
            }
    }
    return GridFunction(dim_, grid_level_ - 1, w, std::move(v));
}

long double average(const GridFunction& f, const GridBox& box) {
    if (box.level < f.grid_level())
        throw std::invalid_argument("average: box must be grid-aligned at resolution >= grid");
    if (box.width <= 0) throw std::invalid_argument("average: zero-measure box");
    const i64 s = GridBox::i64ptwo(box.level - f.grid_level());
    Anchor lo{}, hi{};
    for (int i = 0; i < f.dim(); ++i) {
        lo[i] = box.lo[i] * s;
        hi[i] = (box.lo[i] + box.width) * s;
    }
    long double cells = 1.0L;
    for (int i = 0; i < f.dim(); ++i) cells *= static_cast<long double>(hi[i] - lo[i]);
    return f.cell_sum(lo, hi) / cells;
}

long double average(const GridFunction& f, const DyadicCube& q) {
    return average(f, box_of_cube(q));
}

GridBox cell_window_of_box(const GridBox& box, int grid_level) {
    const int u = std::min(box.level, grid_level);
    const i64 fb = GridBox::i64ptwo(box.level - u);
    const i64 fc = GridBox::i64ptwo(grid_level - u);
    Anchor lo{};
    i64 width = 0;
    for (int i = 0; i < box.dim; ++i) {
        const i64 a = -div_floor(-(box.lo[i] * fb), fc);                  // ceil
        const i64 b = div_floor((box.lo[i] + box.width) * fb, fc);        // floor
        lo[i] = a;
        const i64 w = std::max<i64>(b - a, 0);
        width = (i == 0) ? w : std::min(width, w);
    }
    if (width <= 0) throw std::invalid_argument("cell_window_of_box: box too small for the grid");
    return GridBox(box.dim, grid_level, lo, width);
}

}  // namespace czsparse
