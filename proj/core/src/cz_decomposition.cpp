#include "czsparse/cz_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace czsparse {

CZDecomposition cz_decompose(const GridFunction& f, const std::vector<DyadicCube>& family,
                             double lambda, std::uint64_t probe_seed) {
    if (!(lambda > 0.0)) throw std::invalid_argument("cz_decompose: lambda must be positive");
    for (const auto& q : family) {
        if (q.dim != f.dim()) throw std::invalid_argument("cz_decompose: dimension mismatch");
        if (q.level < f.grid_level())
            throw std::invalid_argument("cz_decompose: cube below grid resolution");
    }
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (!family[i].disjoint_from(family[j]))
                throw std::invalid_argument("cz_decompose: overlapping family");

    const int d = f.dim(), g_lev = f.grid_level();

    // enclosing square window: f's window plus every family cube
    Anchor lo = f.window().lo;
    Anchor hi{};
    for (int i = 0; i < d; ++i) hi[i] = lo[i] + f.window().width;
    for (const auto& q : family) {
        const i64 s = GridBox::i64ptwo(q.level - g_lev);
        for (int i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], q.anchor[i] * s);
            hi[i] = std::max(hi[i], (q.anchor[i] + 1) * s);
        }
    }
    i64 width = 0;
    for (int i = 0; i < d; ++i) width = std::max(width, hi[i] - lo[i]);
    const GridBox gwin(d, g_lev, lo, width);

    i64 n = 1;
    for (int i = 0; i < d; ++i) n *= width;
    std::vector<double> gv(n, 0.0), bv(n, 0.0), babs(n, 0.0);
    const GridFunction shape(d, g_lev, gwin, std::vector<double>(n, 0.0));
    for (i64 idx = 0; idx < n; ++idx) gv[idx] = f.value_at(shape.unflat(idx));

    CZDecomposition out;
    out.lambda = lambda;
    out.report.lambda = lambda;

    long double bad_l1 = 0.0L;
    long double max_mean = 0.0L;
    for (const auto& q : family) {
        const long double avg = average(f, q);
        const i64 s = GridBox::i64ptwo(q.level - g_lev);
        GridBox awin(d, g_lev, Anchor{}, s);
        for (int i = 0; i < d; ++i) awin.lo[i] = q.anchor[i] * s;
        i64 an = 1;
        for (int i = 0; i < d; ++i) an *= s;
        std::vector<double> av(an, 0.0);
        const GridFunction ashape(d, g_lev, awin, std::vector<double>(an, 0.0));
        long double atom_sum = 0.0L, atom_abs = 0.0L;
        for (i64 idx = 0; idx < an; ++idx) {
            const Anchor c = ashape.unflat(idx);
            const double b = static_cast<double>(f.value_at(c) - avg);
            av[idx] = b;
            atom_sum += b;
            atom_abs += fabsl((long double)b);
            const i64 gidx = shape.flat(c);
            gv[gidx] = static_cast<double>(avg);
            bv[gidx] = b;
            babs[gidx] = std::abs(b);
        }
        bad_l1 += atom_abs * f.cell_measure();
        max_mean = std::max(max_mean, fabsl(atom_sum) * f.cell_measure());
        out.atoms.push_back(CZAtom{q, GridFunction(d, g_lev, awin, std::move(av))});
    }

    // reconstruction residual: f - (g + b) cellwise
    long double rec = 0.0L;
    for (i64 idx = 0; idx < n; ++idx)
        rec = std::max(rec,
                       fabsl((long double)f.value_at(shape.unflat(idx)) - (long double)gv[idx] -
                             (long double)bv[idx]));

    out.good = GridFunction(d, g_lev, gwin, std::move(gv));
    const GridFunction bad_abs_fn(d, g_lev, gwin, std::move(babs));

    out.report.good_sup = out.good.norm_sup();
    out.report.good_sup_over_lambda = out.report.good_sup / lambda;
    out.report.bad_l1_total = bad_l1;
    const long double f_l1 = f.norm_l1();
    out.report.bad_l1_over_f_l1 = f_l1 > 0.0L ? static_cast<double>(bad_l1 / f_l1) : 0.0;
    out.report.max_atom_mean_abs = max_mean;
    out.report.reconstruction_max_err = rec;

    // probe cubes R containing some atom cube: full dyadic ancestor chains
    // plus 100 seeded random lattice cubes
    long double probe_max = 0.0L;
    int probes = 0;
    auto probe_avg = [&](const Anchor& rlo, i64 rside) {
        Anchor rhi{};
        for (int i = 0; i < d; ++i) rhi[i] = rlo[i] + rside;
        long double cells = 1.0L;
        for (int i = 0; i < d; ++i) cells *= static_cast<long double>(rside);
        return bad_abs_fn.cell_sum(rlo, rhi) / cells;
    };
    for (const auto& q : family) {
        DyadicCube a = q;
        while (true) {
            const i64 s = GridBox::i64ptwo(a.level - g_lev);
            Anchor alo{};
            for (int i = 0; i < d; ++i) alo[i] = a.anchor[i] * s;
            probe_max = std::max(probe_max, probe_avg(alo, s));
            ++probes;
            bool covers = true;
            for (int i = 0; i < d && covers; ++i)
                covers = alo[i] <= lo[i] && alo[i] + s >= lo[i] + width;
            if (covers || a.level - g_lev > 40) break;
            a = a.parent();
        }
    }
    std::mt19937_64 rng(probe_seed);
    for (int t = 0; t < 100 && !family.empty(); ++t) {
        const auto& q = family[rng() % family.size()];
        const i64 s = GridBox::i64ptwo(q.level - g_lev);
        const i64 side = s + static_cast<i64>(rng() % static_cast<std::uint64_t>(width));
        Anchor rlo{};
        for (int i = 0; i < d; ++i) {
            const i64 a_min = q.anchor[i] * s + s - side;  // keep R containing the cube
            const i64 a_max = q.anchor[i] * s;
            rlo[i] = a_min + static_cast<i64>(rng() % static_cast<std::uint64_t>(a_max - a_min + 1));
        }
        probe_max = std::max(probe_max, probe_avg(rlo, side));
        ++probes;
    }
    out.report.probe_max_over_lambda = static_cast<double>(probe_max / lambda);
    out.report.probes = probes;
    return out;
}

}  // namespace czsparse
