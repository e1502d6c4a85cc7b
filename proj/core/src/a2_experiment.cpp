#include "czsparse/a2_experiment.hpp"

#include <cmath>

#include "czsparse/corpus.hpp"

namespace czsparse {

GridFunction power_weight(int grid_level, const GridBox& win, double exponent, i64 center_cell2) {
    const long double h = ldexpl(1.0L, grid_level);
    const long double x0 = static_cast<long double>(center_cell2) * h / 2.0L;
    const long double ap1 = 1.0L + static_cast<long double>(exponent);
    if (!(ap1 > 0.0L) || !(2.0L - ap1 > 0.0L))
        throw std::invalid_argument("power_weight: exponent must lie in (-1, 1)");
    auto F = [&](long double u) {
        const long double a = fabsl(u);
        return (u < 0 ? -1.0L : 1.0L) * powl(a, ap1) / ap1;
    };
    std::vector<double> v(win.width);
    for (i64 i = 0; i < win.width; ++i) {
        const long double lo = static_cast<long double>(win.lo[0] + i) * h - x0;
        const long double hi = lo + h;
        v[i] = static_cast<double>((F(hi) - F(lo)) / h);
        if (!(v[i] >= 0.0) || !std::isfinite(v[i]))
            throw std::runtime_error("power_weight: discretization failed");
    }
    return GridFunction(1, grid_level, win, std::move(v));
}

double discrete_a2_characteristic(const GridFunction& w, const GridFunction& w_inv) {
    const i64 n = w.num_cells();
    std::vector<long double> pw(n + 1, 0.0L), pv(n + 1, 0.0L);
    for (i64 i = 0; i < n; ++i) {
        pw[i + 1] = pw[i] + w.cell_value(i);
        pv[i + 1] = pv[i] + w_inv.cell_value(i);
    }
    long double best = 0.0L;
    for (i64 a = 0; a < n; ++a)
        for (i64 b = a + 1; b <= n; ++b) {
            const long double len = static_cast<long double>(b - a);
            const long double prod = (pw[b] - pw[a]) / len * ((pv[b] - pv[a]) / len);
            if (prod > best) best = prod;
        }
    const double out = static_cast<double>(best);
    if (!std::isfinite(out))
        throw std::runtime_error("discrete_a2_characteristic: non-finite characteristic");
    return out;
}

A2Result run_a2_sweep(const A2Config& cfg) {
    const int g = cfg.grid_level;
    const i64 n = GridBox::i64ptwo(-g);
    const GridBox q0win(1, g, Anchor{0, 0, 0, 0}, n);
    const DyadicCube q0(1, 0, Anchor{0, 0, 0, 0});
    const ScaleConstants sc = scale_constants(1);
    const GridBox family_win = cell_window_of_box(dilate(q0, sc.lambda_d), g);

    A2Result out;

    // one fixed family built from a spike pair at the weights' singularity
    const GridFunction g0 = power_weight(g, q0win, -0.5, n);
    SparseParams p;
    p.eta0 = cfg.eta0;
    p.c0 = cfg.c0;
    auto [fam, diag] = build_sparse(g0, g0, q0, cfg.eta0, p);
    const auto chk = verify_sparsity(fam);
    if (!chk.disjoint || !chk.eta_ok)
        throw std::runtime_error("run_a2_sweep: family failed certification");
    out.family_entries = fam.entries.size();
    out.family_eta_certified = fam.eta_certified;

    std::vector<double> log_char, log_ratio;
    for (double a = -(1.0 - cfg.delta); a <= 1.0 - cfg.delta + 1e-9; a += 0.3) {
        const GridFunction w = power_weight(g, family_win, a, n);
        const GridFunction w_inv = power_weight(g, family_win, -a, n);
        const double characteristic = discrete_a2_characteristic(w, w_inv);

        std::vector<GridFunction> battery;
        for (int k = 1; k <= 7; ++k) {
            const i64 half = n >> k;
            if (half < 1) break;
            std::vector<double> ind(n, 0.0), extremal(n, 0.0);
            for (i64 i = n / 2 - half; i < n / 2 + half; ++i) {
                ind[i] = 1.0;
                extremal[i] = w_inv.value_at(Anchor{i, 0, 0, 0});
            }
            battery.emplace_back(1, g, q0win, std::move(ind));
            battery.emplace_back(1, g, q0win, std::move(extremal));
        }
        battery.push_back(random_function(1, g, q0win, cfg.seed, "uniform"));
        battery.push_back(random_function(1, g, q0win, cfg.seed + 1, "spiky"));

        double ratio = 0.0;
        for (const auto& f : battery) {
            const GridFunction af = apply_sparse(fam, f, family_win);
            long double num = 0.0L, den = 0.0L;
            for (i64 i = 0; i < af.num_cells(); ++i) {
                const Anchor cell = af.unflat(i);
                const long double wv = w.cell_value(i);
                num += static_cast<long double>(af.cell_value(i)) * af.cell_value(i) * wv;
                den += static_cast<long double>(f.value_at(cell)) * f.value_at(cell) * wv;
            }
            if (den > 0.0L) ratio = std::max(ratio, std::sqrt(static_cast<double>(num / den)));
        }
        out.points.push_back(A2Point{a, characteristic, ratio});
        if (characteristic > 1.0 + 1e-9 && ratio > 0.0) {
            log_char.push_back(std::log(characteristic));
            log_ratio.push_back(std::log(ratio));
        }
    }

    if (log_char.size() >= 2) {
        double mx = 0, my = 0;
        for (size_t i = 0; i < log_char.size(); ++i) {
            mx += log_char[i];
            my += log_ratio[i];
        }
        mx /= static_cast<double>(log_char.size());
        my /= static_cast<double>(log_char.size());
        double sxx = 0, sxy = 0;
        for (size_t i = 0; i < log_char.size(); ++i) {
            sxx += (log_char[i] - mx) * (log_char[i] - mx);
            sxy += (log_char[i] - mx) * (log_ratio[i] - my);
        }
        out.loglog_slope = sxx > 0 ? sxy / sxx : 0.0;
    }
    return out;
}

}  // namespace czsparse
