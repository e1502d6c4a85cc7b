#include "czsparse/sparse_engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace czsparse {

double default_c_m(int dim) {
    return 2.0 * std::pow(3.0, dim) * std::pow(6.0, dim);
}

double default_c0(const ScaleConstants& sc, double eta0, double c_m) {
    double lam_pow = 1.0;
    for (int i = 0; i < sc.dim; ++i) lam_pow *= static_cast<double>(sc.lambda_d);
    return 2.0 * c_m * lam_pow / (1.0 - eta0);
}

Region stopping_region(const GridFunction& f1_loc, const GridFunction& f2_loc,
                       const DyadicCube& q, double c0, const ScaleConstants& sc) {
    if (!f1_loc.nonnegative() || !f2_loc.nonnegative())
        throw std::invalid_argument("stopping_region: inputs must be nonnegative");
    if (!(c0 > 0.0)) throw std::invalid_argument("stopping_region: c0 must be positive");
    const GridBox dil = dilate(q, sc.lambda_d);
    const GridBox dil2 = dilate_double(q, sc.lambda_d);
    const double three_pow = std::pow(3.0, sc.dim);
    Region omega = make_region(f1_loc.dim(), f1_loc.grid_level(), {});
    const GridFunction* fs[2] = {&f1_loc, &f2_loc};
    for (const GridFunction* f : fs) {
        const long double avg = average(*f, dil);
        if (!(avg > 0.0L)) continue;
        const double threshold = c0 * static_cast<double>(avg) / three_pow;
        omega = region_union(omega, superlevel_of_maximal(*f, dil2, threshold));
    }
    return omega;
}

namespace {

i64 cube_cells(const DyadicCube& q, int grid_level) {
    i64 n = 1;
    for (int i = 0; i < q.dim; ++i) n *= GridBox::i64ptwo(q.level - grid_level);
    return n;
}

std::vector<Anchor> cube_cell_list(const DyadicCube& q, int grid_level) {
    const i64 f = GridBox::i64ptwo(q.level - grid_level);
    std::vector<Anchor> cells;
    if (q.dim == 1) {
        for (i64 a = 0; a < f; ++a) cells.push_back(Anchor{q.anchor[0] * f + a, 0, 0, 0});
    } else {
        for (i64 a0 = 0; a0 < f; ++a0)
            for (i64 a1 = 0; a1 < f; ++a1)
                cells.push_back(Anchor{q.anchor[0] * f + a0, q.anchor[1] * f + a1, 0, 0});
    }
    return cells;
}

}  // namespace

NodeOutcome iterate_once(const DyadicCube& q, const GridFunction& f1_loc,
                         const GridFunction& f2_loc, const ScaleConstants& sc,
                         const SparseParams& p) {
    const int g = f1_loc.grid_level();
    if (q.level <= g)
        throw std::invalid_argument("iterate_once: node must be strictly coarser than the grid");
    double c0 = p.c0 > 0.0 ? p.c0 : default_c0(sc, p.eta0, p.c_m > 0.0 ? p.c_m : default_c_m(sc.dim));
    const i64 q_cells = cube_cells(q, g);
    NodeOutcome out;
    int esc = 0;
    while (true) {
        out.omega = stopping_region(f1_loc, f2_loc, q, c0, sc);
        if (!p.auto_escalate) break;
        if (static_cast<long double>(out.omega.cell_count()) <=
            (1.0L - static_cast<long double>(p.eta0)) * static_cast<long double>(q_cells))
            break;
        if (esc >= p.max_escalations)
            throw std::runtime_error("iterate_once: stopping region failed to shrink");
        c0 *= 2.0;
        ++esc;
    }
    out.escalations = esc;
    out.c0_used = c0;

    const WhitneyCover cover = whitney_decompose(out.omega, sc, g);
    std::vector<Anchor> removed;
    for (const auto& L : cover.cubes) {
        if (!L.contained_in(q) || L == q) continue;
        if (!f1_loc.nonzero_on_cube(L)) continue;
        out.children.push_back(L);
        auto cells = cube_cell_list(L, g);
        removed.insert(removed.end(), cells.begin(), cells.end());
    }
    for (const auto& L : cover.frontier) {
        if (!L.contained_in(q)) continue;
        if (!f1_loc.nonzero_on_cube(L)) continue;
        out.frontier.push_back(L);
        auto cells = cube_cell_list(L, g);
        removed.insert(removed.end(), cells.begin(), cells.end());
    }
    const Region removed_region = make_region(q.dim, g, std::move(removed));
    const Region q_region = make_region(q.dim, g, cube_cell_list(q, g));
    out.major = region_difference(q_region, removed_region);
    return out;
}

std::pair<SparseFamily, BuildDiagnostics> build_sparse(const GridFunction& f1,
                                                       const GridFunction& f2,
                                                       const DyadicCube& q0, double eta0,
                                                       SparseParams p) {
    if (!(eta0 > 0.0 && eta0 < 1.0)) throw std::invalid_argument("build_sparse: eta0 in (0,1)");
    if (f1.grid_level() != f2.grid_level() || f1.dim() != f2.dim())
        throw std::invalid_argument("build_sparse: inputs must share a grid");
    if (!f1.nonnegative() || !f2.nonnegative())
        throw std::invalid_argument("build_sparse: inputs must be nonnegative");
    // support confined to Q0
    for (const GridFunction* f : {&f1, &f2}) {
        const GridFunction inside = f->restrict_to_cube(q0);
        for (i64 i = 0; i < f->num_cells(); ++i)
            if (f->cell_value(i) != inside.cell_value(i))
                throw std::invalid_argument("build_sparse: support must lie in Q0");
    }
    const int g = f1.grid_level();
    if (q0.level < g) throw std::invalid_argument("build_sparse: Q0 finer than the grid");
    ScaleConstants sc = scale_constants(f1.dim());
    p.eta0 = eta0;
    if (p.s_floor == std::numeric_limits<int>::min()) p.s_floor = g;
    if (p.s_floor < g)
        throw std::invalid_argument("build_sparse: iteration floor cannot refine the grid");
    const double c_m = p.c_m > 0.0 ? p.c_m : default_c_m(sc.dim);
    const double c0_base = p.c0 > 0.0 ? p.c0 : default_c0(sc, eta0, c_m);
    p.c_m = c_m;
    p.c0 = c0_base;

    SparseFamily fam;
    fam.constants = sc;
    fam.eta0 = eta0;
    double lam_pow = 1.0;
    for (int i = 0; i < sc.dim; ++i) lam_pow *= static_cast<double>(sc.lambda_d);
    fam.eta_target = eta0 / lam_pow;
    fam.c0_base = c0_base;
    fam.c0_max_used = c0_base;

    BuildDiagnostics diag;

    struct Node {
        DyadicCube cube;
        int generation;
    };
    std::deque<Node> queue;

    // Root step: beyond per-node escalation, the root threshold also has to
    // tame the first generation's total mass against |Omega_{Q0}|.
    NodeOutcome root;
    {
        SparseParams rp = p;
        const GridFunction f2_loc = f2.restrict_to_box(dilate(q0, sc.lambda_d));
        if (q0.level <= g || q0.level <= p.s_floor) {
            // degenerate: the root is already a leaf
            root.omega = make_region(f1.dim(), g, {});
            root.major = make_region(f1.dim(), g, cube_cell_list(q0, g));
            root.c0_used = c0_base;
        } else {
            int guard = 0;
            while (true) {
                root = iterate_once(q0, f1, f2_loc, sc, rp);
                i64 gen1 = 0;
                for (const auto& c : root.children) gen1 += cube_cells(c, g);
                if (static_cast<long double>(gen1) <=
                    (1.0L - static_cast<long double>(eta0)) *
                        static_cast<long double>(root.omega.cell_count()))
                    break;
                if (++guard > p.max_escalations)
                    throw std::runtime_error("build_sparse: root generation bound not attained");
                rp.c0 = root.c0_used * 2.0;
                ++diag.root_escalations;
            }
        }
    }
    diag.omega0_cells = root.omega.cell_count();

    auto emit = [&](const DyadicCube& q, int gen, const NodeOutcome& node, bool leaf) {
        SparseEntry e;
        e.base = q;
        e.dilated = dilate(q, sc.lambda_d);
        e.major_subset = node.major;
        e.generation = gen;
        e.leaf = leaf;
        e.escalations = node.escalations;
        e.c0_used = node.c0_used;
        fam.c0_max_used = std::max(fam.c0_max_used, node.c0_used);
        fam.entries.push_back(std::move(e));
        ++diag.total_nodes;
    };

    const bool root_leaf = q0.level <= p.s_floor || q0.level <= g;
    emit(q0, 0, root, root_leaf);
    if (root_leaf) diag.residual_cubes.push_back(q0);
    for (const auto& L : root.frontier) diag.residual_cubes.push_back(L);
    for (const auto& L : root.children) queue.push_back({L, 1});

    while (!queue.empty()) {
        const Node n = queue.front();
        queue.pop_front();
        diag.max_generation = std::max(diag.max_generation, n.generation);
        if (n.cube.level <= p.s_floor || n.cube.level <= g) {
            NodeOutcome leaf;
            leaf.omega = make_region(f1.dim(), g, {});
            leaf.major = make_region(f1.dim(), g, cube_cell_list(n.cube, g));
            leaf.c0_used = p.c0;
            emit(n.cube, n.generation, leaf, true);
            diag.residual_cubes.push_back(n.cube);
            continue;
        }
        const GridFunction f1_loc = f1.restrict_to_cube(n.cube);
        const GridFunction f2_loc = f2.restrict_to_box(dilate(n.cube, sc.lambda_d));
        const NodeOutcome node = iterate_once(n.cube, f1_loc, f2_loc, sc, p);
        emit(n.cube, n.generation, node, false);
        for (const auto& L : node.frontier) diag.residual_cubes.push_back(L);
        for (const auto& L : node.children) queue.push_back({L, n.generation + 1});
    }

    std::sort(fam.entries.begin(), fam.entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
        if (a.generation != b.generation) return a.generation < b.generation;
        return cube_less(a.base, b.base);
    });
    std::sort(diag.residual_cubes.begin(), diag.residual_cubes.end(), cube_less);

    // decay series and certified sparsity
    diag.decay.resize(static_cast<size_t>(diag.max_generation) + 1);
    for (int i = 0; i <= diag.max_generation; ++i) diag.decay[i].generation = i;
    fam.eta_certified = 1.0;
    for (const auto& e : fam.entries) {
        auto& d = diag.decay[e.generation];
        d.base_cells += cube_cells(e.base, g);
        const long double lam_powl = static_cast<long double>(lam_pow);
        const long double ratio = static_cast<long double>(e.major_subset.cell_count()) /
                                  (lam_powl * static_cast<long double>(cube_cells(e.base, g)));
        fam.eta_certified = std::min(fam.eta_certified, static_cast<double>(ratio));
    }
    for (auto& d : diag.decay)
        d.measure = ldexpl(static_cast<long double>(d.base_cells), f1.dim() * g);
    return {std::move(fam), std::move(diag)};
}

DominationCertificate dominate(const Kernel& k, const BumpProfile& profile,
                               const GridFunction& f1, const GridFunction& f2,
                               const DyadicCube& q0, double eta0, const SparseParams& p) {
    if (k.dim != f1.dim()) throw std::invalid_argument("dominate: kernel dimension mismatch");
    DominationCertificate cert;
    auto [fam, diag] = build_sparse(f1, f2, q0, eta0, p);
    cert.family = std::move(fam);
    cert.diagnostics = std::move(diag);
    cert.params = p;
    cert.kernel_name = k.name;

    cert.pairing = pair_bilinear(PairMode::Full, 0, k, profile, f1, f2, p.quad);
    cert.sparse_form_value = sparse_form(cert.family, f1, f2);

    const ScaleConstants& sc = cert.family.constants;
    long double leaf_measure = 0.0L;
    for (const auto& L : cert.diagnostics.residual_cubes) {
        const GridFunction f1_leaf = f1.restrict_to_cube(L);
        if (f1_leaf.is_zero()) continue;
        const GridFunction f2_leaf = f2.restrict_to_box(dilate(L, sc.lambda_d));
        const PairingResult pr = pair_bilinear(PairMode::Full, 0, k, profile, f1_leaf, f2_leaf, p.quad);
        cert.residual_numeric += std::abs(pr.value);
        cert.residual_quad_bound += pr.error_bound;
        ++cert.residual_leaves;
        leaf_measure += ldexpl(1.0L, f1.dim() * L.level);
    }
    cert.residual_analytic = p.residual_c_op * f1.norm_sup() * f2.norm_sup() *
                             static_cast<double>(leaf_measure);
    cert.residual_total = cert.residual_numeric + cert.residual_quad_bound + cert.residual_analytic;
    if (cert.sparse_form_value > 0.0L) {
        cert.ratio = std::abs(cert.pairing.value) / static_cast<double>(cert.sparse_form_value);
        cert.ratio_defined = true;
    }
    return cert;
}

}  // namespace czsparse
