#include "czsparse/json_io.hpp"

#include <cstdio>

namespace czsparse {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json region_to_json(const Region& r) {
    json cells = json::array();
    for (const auto& c : r.cells) {
        json a = json::array();
        for (int i = 0; i < r.dim; ++i) a.push_back(c[i]);
        cells.push_back(std::move(a));
    }
    return json{{"dim", r.dim}, {"grid_level", r.grid_level}, {"cells", std::move(cells)}};
}

Region region_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<Anchor> cells;
    for (const auto& a : j.at("cells")) {
        Anchor c{};
        for (int i = 0; i < dim; ++i) c[i] = a.at(i).get<i64>();
        cells.push_back(c);
    }
    return make_region(dim, j.at("grid_level").get<int>(), std::move(cells));
}

json cube_to_json(const DyadicCube& q) {
    json a = json::array();
    for (int i = 0; i < q.dim; ++i) a.push_back(q.anchor[i]);
    return json{{"level", q.level}, {"anchor", std::move(a)}};
}

DyadicCube cube_from_json(const json& j) {
    const auto& arr = j.at("anchor");
    Anchor a{};
    const int dim = static_cast<int>(arr.size());
    for (int i = 0; i < dim; ++i) a[i] = arr.at(i).get<i64>();
    return DyadicCube(dim, j.at("level").get<int>(), a);
}

json box_to_json(const GridBox& b) {
    json lo = json::array();
    for (int i = 0; i < b.dim; ++i) lo.push_back(b.lo[i]);
    return json{{"level", b.level}, {"lo", std::move(lo)}, {"width", b.width}};
}

json grid_function_to_json(const GridFunction& f) {
    json vals = json::array();
    for (i64 i = 0; i < f.num_cells(); ++i) vals.push_back(format_double(f.cell_value(i)));
    return json{{"dim", f.dim()},
                {"grid_level", f.grid_level()},
                {"support_box", box_to_json(f.window())},
                {"values", std::move(vals)}};
}

GridFunction grid_function_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    const int level = j.at("grid_level").get<int>();
    const auto& sb = j.at("support_box");
    Anchor lo{};
    for (int i = 0; i < dim; ++i) lo[i] = sb.at("lo").at(i).get<i64>();
    GridBox box(dim, sb.at("level").get<int>(), lo, sb.at("width").get<i64>());
    std::vector<double> values;
    for (const auto& v : j.at("values")) values.push_back(std::stod(v.get<std::string>()));
    return GridFunction(dim, level, box, std::move(values));
}

json cover_to_json(const WhitneyCover& c) {
    json cubes = json::array(), frontier = json::array();
    for (const auto& q : c.cubes) cubes.push_back(cube_to_json(q));
    for (const auto& q : c.frontier) frontier.push_back(cube_to_json(q));
    return json{{"cubes", std::move(cubes)},
                {"frontier", std::move(frontier)},
                {"c_w", c.constants.c_w.to_string()},
                {"s_floor", c.s_floor}};
}

json cover_check_to_json(const CoverCheck& c) {
    return json{{"lower_bound_ok", c.lower_bound_ok}, {"upper_bound_ok", c.upper_bound_ok},
                {"dilation_ok", c.dilation_ok},       {"disjoint_ok", c.disjoint_ok},
                {"coverage_ok", c.coverage_ok},       {"frontier_ok", c.frontier_ok},
                {"n_cmp", c.n_cmp},                   {"cubes_checked", c.checked},
                {"all_ok", c.all_ok()}};
}

json cz_report_to_json(const CZReport& r) {
    return json{{"lambda", r.lambda},
                {"good_sup", r.good_sup},
                {"good_sup_over_lambda", r.good_sup_over_lambda},
                {"bad_l1_total", static_cast<double>(r.bad_l1_total)},
                {"bad_l1_over_f_l1", r.bad_l1_over_f_l1},
                {"probe_max_over_lambda", r.probe_max_over_lambda},
                {"max_atom_mean_abs", static_cast<double>(r.max_atom_mean_abs)},
                {"reconstruction_max_err", static_cast<double>(r.reconstruction_max_err)},
                {"probes", r.probes}};
}

json dini_to_json(const DiniResult& r) {
    return json{{"value", r.value},
                {"error_estimate", r.error_estimate},
                {"converged", r.converged},
                {"divergent", r.divergent},
                {"intervals", r.intervals}};
}

json pairing_to_json(const PairingResult& r) {
    return json{{"value", r.value}, {"error_bound", r.error_bound}, {"exact", r.exact}};
}

json localization_to_json(const LocalizationReport& r) {
    json out{{"annulus_samples", r.annulus_samples},
             {"annulus_violations", r.annulus_violations},
             {"support_samples", r.support_samples},
             {"support_violations", r.support_violations},
             {"max_offsupport_value", r.max_offsupport_value},
             {"tolerance", r.tolerance},
             {"ok", r.ok()}};
    if (r.has_witness) {
        out["witness"] = json{{"scale", r.witness_scale},
                              {"x", {r.witness_x[0], r.witness_x[1]}},
                              {"y", {r.witness_y[0], r.witness_y[1]}}};
    }
    return out;
}

json quadrature_to_json(const QuadratureConfig& q) {
    return json{{"gl_order", q.gl_order},
                {"depth_cap", q.depth_cap},
                {"pair_budget", q.pair_budget},
                {"tol", q.tol}};
}

json sparse_params_to_json(const SparseParams& p) {
    return json{{"eta0", p.eta0},
                {"c0", p.c0},
                {"c_m", p.c_m},
                {"s_floor", p.s_floor},
                {"auto_escalate", p.auto_escalate},
                {"max_escalations", p.max_escalations},
                {"residual_c_op", p.residual_c_op},
                {"quadrature", quadrature_to_json(p.quad)}};
}

json sparse_family_to_json(const SparseFamily& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        entries.push_back(json{{"base", cube_to_json(e.base)},
                               {"dilated", box_to_json(e.dilated)},
                               {"generation", e.generation},
                               {"leaf", e.leaf},
                               {"escalations", e.escalations},
                               {"c0_used", e.c0_used},
                               {"e_cells", e.major_subset.cell_count()}});
    }
    return json{{"dim", s.constants.dim},
                {"lambda_d", s.constants.lambda_d},
                {"k_d", s.constants.k_d},
                {"c_w", s.constants.c_w.to_string()},
                {"eta0", s.eta0},
                {"eta_target", s.eta_target},
                {"eta_certified", s.eta_certified},
                {"c0_base", s.c0_base},
                {"c0_max_used", s.c0_max_used},
                {"entries", std::move(entries)}};
}

json certificate_to_json(const DominationCertificate& c) {
    json decay = json::array();
    for (const auto& d : c.diagnostics.decay)
        decay.push_back(json{{"generation", d.generation},
                             {"base_cells", d.base_cells},
                             {"measure", static_cast<double>(d.measure)}});
    return json{{"kernel", c.kernel_name},
                {"family", sparse_family_to_json(c.family)},
                {"pairing", pairing_to_json(c.pairing)},
                {"sparse_form", static_cast<double>(c.sparse_form_value)},
                {"residual",
                 json{{"numeric", c.residual_numeric},
                      {"quad_bound", c.residual_quad_bound},
                      {"analytic_bound", c.residual_analytic},
                      {"total", c.residual_total},
                      {"leaves", c.residual_leaves}}},
                {"ratio", c.ratio},
                {"ratio_defined", c.ratio_defined},
                {"omega0_cells", c.diagnostics.omega0_cells},
                {"root_escalations", c.diagnostics.root_escalations},
                {"decay", std::move(decay)},
                {"params", sparse_params_to_json(c.params)}};
}

}  // namespace czsparse
