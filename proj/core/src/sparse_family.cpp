#include "czsparse/sparse_family.hpp"

#include <algorithm>
#include <cmath>

namespace czsparse {

long double sparse_form(const SparseFamily& s, const GridFunction& f1, const GridFunction& f2) {
    long double total = 0.0L, comp = 0.0L;
    for (const auto& e : s.entries) {
        const long double a1 = average(f1, e.dilated);
        const long double a2 = average(f2, e.dilated);
        long double box_measure = 1.0L;
        for (int i = 0; i < e.dilated.dim; ++i)
            box_measure *= static_cast<long double>(e.dilated.width) * ldexpl(1.0L, e.dilated.level);
        const long double term = a1 * a2 * box_measure;
        const long double t = total + term;
        if (fabsl(total) >= fabsl(term))
            comp += (total - t) + term;
        else
            comp += (term - t) + total;
        total = t;
    }
    return total + comp;
}

GridFunction apply_sparse(const SparseFamily& s, const GridFunction& f, const GridBox& out_window) {
    if (out_window.level != f.grid_level())
        throw std::invalid_argument("apply_sparse: output window must live on f's grid");
    const int d = f.dim();
    i64 n = 1;
    for (int i = 0; i < d; ++i) n *= out_window.width;
    std::vector<double> acc(n, 0.0);
    const GridFunction shape(d, f.grid_level(), out_window, std::vector<double>(n, 0.0));
    for (const auto& e : s.entries) {
        const double avg = static_cast<double>(average(f, e.dilated));
        if (avg == 0.0) continue;
        const i64 sc = GridBox::i64ptwo(e.dilated.level - f.grid_level());
        Anchor lo{}, hi{};
        for (int i = 0; i < d; ++i) {
            lo[i] = std::max(e.dilated.lo[i] * sc, out_window.lo[i]);
            hi[i] = std::min((e.dilated.lo[i] + e.dilated.width) * sc,
                             out_window.lo[i] + out_window.width);
        }
        bool empty = false;
        for (int i = 0; i < d; ++i) empty = empty || lo[i] >= hi[i];
        if (empty) continue;
        if (d == 1) {
            for (i64 a = lo[0]; a < hi[0]; ++a) acc[shape.flat(Anchor{a, 0, 0, 0})] += avg;
        } else {
            for (i64 a0 = lo[0]; a0 < hi[0]; ++a0)
                for (i64 a1 = lo[1]; a1 < hi[1]; ++a1)
                    acc[shape.flat(Anchor{a0, a1, 0, 0})] += avg;
        }
    }
    return GridFunction(d, f.grid_level(), out_window, std::move(acc));
}

SparsityCheck verify_sparsity(const SparseFamily& s) {
    SparsityCheck chk;
    const i64 lam = s.constants.lambda_d;
    long double lam_pow = 1.0L;
    for (int i = 0; i < s.constants.dim; ++i) lam_pow *= static_cast<long double>(lam);

    for (const auto& e : s.entries) {
        // |E_Q| / |Lambda Q| in exact cell counts
        const Region& eq = e.major_subset;
        const int g = eq.grid_level;
        i64 q_cells = 1;
        for (int i = 0; i < s.constants.dim; ++i)
            q_cells *= GridBox::i64ptwo(e.base.level - g);
        const long double ratio =
            static_cast<long double>(eq.cell_count()) / (lam_pow * static_cast<long double>(q_cells));
        chk.eta_min = std::min(chk.eta_min, static_cast<double>(ratio));
        if (static_cast<long double>(eq.cell_count()) <
            static_cast<long double>(s.eta0) * static_cast<long double>(q_cells))
            chk.eta_ok = false;
        // E_Q inside Q
        const Region qreg = clip_to_box(eq, box_of_cube(e.base));
        if (qreg.cell_count() != eq.cell_count()) chk.subset_ok = false;
    }
    for (size_t i = 0; i + 1 < s.entries.size(); ++i)
        for (size_t j = i + 1; j < s.entries.size(); ++j)
            if (!regions_disjoint(s.entries[i].major_subset, s.entries[j].major_subset))
                chk.disjoint = false;
    return chk;
}

}  // namespace czsparse
