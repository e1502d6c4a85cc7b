#include "czsparse/maximal.hpp"

#include <algorithm>
#include <deque>

namespace czsparse {

namespace {

// dense copy of f over the window's cells (zero where f is absent)
std::vector<long double> embed(const GridFunction& f, const GridBox& win) {
    const i64 w = win.width;
    std::vector<long double> v(f.dim() == 1 ? w : w * w, 0.0L);
    if (f.dim() == 1) {
        for (i64 i = 0; i < w; ++i) v[i] = f.value_at(Anchor{win.lo[0] + i, 0, 0, 0});
    } else {
        for (i64 i = 0; i < w; ++i)
            for (i64 j = 0; j < w; ++j)
                v[i * w + j] = f.value_at(Anchor{win.lo[0] + i, win.lo[1] + j, 0, 0});
    }
    return v;
}

// per-cell sliding max over positions j in [c-k+1, c] clipped to [0, n-k]
void slide_max_1d(const std::vector<long double>& a, i64 k, i64 n,
                  std::vector<long double>& out) {
    std::deque<i64> dq;
    for (i64 c = 0; c < n; ++c) {
        const i64 j = c;
        if (j <= n - k) {
            while (!dq.empty() && a[dq.back()] <= a[j]) dq.pop_back();
            dq.push_back(j);
        }
        while (!dq.empty() && dq.front() < c - k + 1) dq.pop_front();
        if (!dq.empty()) out[c] = std::max(out[c], a[dq.front()]);
    }
}

}  // namespace

GridFunction lattice_maximal(const GridFunction& f, const GridBox& search_box) {
    const GridBox win = cell_window_of_box(search_box, f.grid_level());
    const i64 n = win.width;
    const auto v = embed(f, win);

    if (f.dim() == 1) {
        std::vector<long double> p(n + 1, 0.0L);
        for (i64 i = 0; i < n; ++i) p[i + 1] = p[i] + v[i];
        std::vector<long double> best(n, 0.0L), avg(n, 0.0L);
        for (i64 k = 1; k <= n; ++k) {
            avg.assign(n - k + 1, 0.0L);
            for (i64 j = 0; j + k <= n; ++j) avg[j] = (p[j + k] - p[j]) / k;
            slide_max_1d(avg, k, n, best);
        }
        std::vector<double> out(n);
        for (i64 i = 0; i < n; ++i) out[i] = static_cast<double>(best[i]);
        return GridFunction(1, f.grid_level(), win, std::move(out));
    }

    if (f.dim() != 2) throw std::invalid_argument("lattice_maximal: d=1,2 only");
    std::vector<long double> p((n + 1) * (n + 1), 0.0L);
    auto pat = [&](i64 i, i64 j) -> long double& { return p[i * (n + 1) + j]; };
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            pat(i + 1, j + 1) = pat(i, j + 1) + pat(i + 1, j) - pat(i, j) + v[i * n + j];

    std::vector<long double> best(n * n, 0.0L);
    std::vector<long double> row_in(n), row_out(n), hmax(n * n);
    for (i64 k = 1; k <= n; ++k) {
        const long double kk = static_cast<long double>(k) * k;
        const i64 m = n - k + 1;
        // horizontal pass: per window row j0, max over j1 covering each column
        for (i64 j0 = 0; j0 < m; ++j0) {
            for (i64 j1 = 0; j1 < m; ++j1)
                row_in[j1] = (pat(j0 + k, j1 + k) - pat(j0, j1 + k) - pat(j0 + k, j1) +
                              pat(j0, j1)) /
                             kk;
            row_out.assign(n, -1.0L);
            std::deque<i64> dq;
            for (i64 c = 0; c < n; ++c) {
                if (c <= n - k) {
                    while (!dq.empty() && row_in[dq.back()] <= row_in[c]) dq.pop_back();
                    dq.push_back(c);
                }
                while (!dq.empty() && dq.front() < c - k + 1) dq.pop_front();
                row_out[c] = dq.empty() ? -1.0L : row_in[dq.front()];
            }
            for (i64 c = 0; c < n; ++c) hmax[j0 * n + c] = row_out[c];
        }
        // vertical pass: per column, max over j0 covering each row
        for (i64 c1 = 0; c1 < n; ++c1) {
            std::deque<i64> dq;
            for (i64 c0 = 0; c0 < n; ++c0) {
                const i64 j = c0;
                if (j < m) {
                    while (!dq.empty() && hmax[dq.back() * n + c1] <= hmax[j * n + c1])
                        dq.pop_back();
                    dq.push_back(j);
                }
                while (!dq.empty() && dq.front() < c0 - k + 1) dq.pop_front();
                if (!dq.empty()) {
                    const long double cand = hmax[dq.front() * n + c1];
                    if (cand > best[c0 * n + c1]) best[c0 * n + c1] = cand;
                }
            }
        }
    }
    std::vector<double> out(n * n);
    for (i64 i = 0; i < n * n; ++i) out[i] = static_cast<double>(std::max(best[i], 0.0L));
    return GridFunction(2, f.grid_level(), win, std::move(out));
}

Region superlevel(const GridFunction& mf, double threshold) {
    if (!(threshold > 0.0) && threshold != 0.0)
        throw std::invalid_argument("superlevel: threshold must be a number");
    std::vector<Anchor> cells;
    for (i64 i = 0; i < mf.num_cells(); ++i)
        if (mf.cell_value(i) > threshold) cells.push_back(mf.unflat(i));
    return make_region(mf.dim(), mf.grid_level(), std::move(cells));
}

Region superlevel_of_maximal(const GridFunction& f, const GridBox& search_box, double threshold) {
    const GridBox win = cell_window_of_box(search_box, f.grid_level());
    const i64 n = win.width;
    const auto v = embed(f, win);
    std::vector<Anchor> cells;

    if (f.dim() == 1) {
        // cell c is covered iff  min_{a<=c} (P[a] - t a) < max_{b>c} (P[b] - t b)
        std::vector<long double> w(n + 1);
        long double run = 0.0L;
        for (i64 i = 0; i <= n; ++i) {
            if (i > 0) run += v[i - 1];
            w[i] = run - static_cast<long double>(threshold) * i;
        }
        std::vector<long double> prefmin(n + 1), sufmax(n + 1);
        prefmin[0] = w[0];
        for (i64 i = 1; i <= n; ++i) prefmin[i] = std::min(prefmin[i - 1], w[i]);
        sufmax[n] = w[n];
        for (i64 i = n - 1; i >= 0; --i) sufmax[i] = std::max(sufmax[i + 1], w[i]);
        for (i64 c = 0; c < n; ++c)
            if (prefmin[c] < sufmax[c + 1]) cells.push_back(Anchor{win.lo[0] + c, 0, 0, 0});
        return make_region(1, f.grid_level(), std::move(cells));
    }

    if (f.dim() != 2) throw std::invalid_argument("superlevel_of_maximal: d=1,2 only");
    std::vector<long double> p((n + 1) * (n + 1), 0.0L);
    auto pat = [&](i64 i, i64 j) -> long double& { return p[i * (n + 1) + j]; };
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            pat(i + 1, j + 1) = pat(i, j + 1) + pat(i + 1, j) - pat(i, j) + v[i * n + j];
    std::vector<i64> diff((n + 1) * (n + 1), 0);
    auto dat = [&](i64 i, i64 j) -> i64& { return diff[i * (n + 1) + j]; };
    for (i64 k = 1; k <= n; ++k) {
        const long double bar = static_cast<long double>(threshold) * k * k;
        for (i64 j0 = 0; j0 + k <= n; ++j0)
            for (i64 j1 = 0; j1 + k <= n; ++j1) {
                const long double s =
                    pat(j0 + k, j1 + k) - pat(j0, j1 + k) - pat(j0 + k, j1) + pat(j0, j1);
                if (s > bar) {
                    dat(j0, j1) += 1;
                    dat(j0 + k, j1) -= 1;
                    dat(j0, j1 + k) -= 1;
                    dat(j0 + k, j1 + k) += 1;
                }
            }
    }
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) {
            if (i > 0) dat(i, j) += dat(i - 1, j);
        }
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 1; j < n; ++j) dat(i, j) += dat(i, j - 1);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            if (dat(i, j) > 0) cells.push_back(Anchor{win.lo[0] + i, win.lo[1] + j, 0, 0});
    return make_region(2, f.grid_level(), std::move(cells));
}

}  // namespace czsparse
