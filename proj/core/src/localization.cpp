#include "czsparse/localization.hpp"

#include <cmath>
#include <random>

namespace czsparse {

LocalizationReport check_localization(const Kernel& k, const BumpProfile& profile,
                                      const DyadicCube& q, const GridFunction& f,
                                      const ScaleConstants& sc, i64 sample_budget,
                                      std::uint64_t seed, double tol,
                                      const QuadratureConfig& quad) {
    if (q.dim != f.dim()) throw std::invalid_argument("check_localization: dimension mismatch");
    {
        const GridFunction inside = f.restrict_to_cube(q);
        for (i64 i = 0; i < f.num_cells(); ++i)
            if (f.cell_value(i) != inside.cell_value(i))
                throw std::invalid_argument("check_localization: f not supported in Q");
    }

    LocalizationReport rep;
    rep.tolerance = tol;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int d = q.dim;
    const double side = std::ldexp(1.0, q.level);
    Point center{};
    for (int i = 0; i < d; ++i) center[i] = (static_cast<double>(q.anchor[i]) + 0.5) * side;
    const int cap_s = scale_index(q, sc.k_d);

    // (a): 80% of the budget on the vanishing-shell property
    const i64 n_annulus = sample_budget * 4 / 5;
    for (i64 t = 0; t < n_annulus; ++t) {
        const int s = cap_s + 1 + static_cast<int>(rng() % 12);
        Point y{};
        for (int i = 0; i < d; ++i)
            y[i] = (static_cast<double>(q.anchor[i]) + unit(rng)) * side;
        // half the samples inside the inner radius, half beyond the outer one
        const double r_lo = std::ldexp(1.0, s - 2), r_hi = std::ldexp(1.0, sc.k_d + s);
        const double radius = (t % 2 == 0) ? r_lo * 0.98 * unit(rng)
                                           : r_hi * (1.02 + unit(rng));
        Point x = center;
        if (d == 1) {
            x[0] += (rng() % 2 ? radius : -radius);
        } else {
            const double phi = 2.0 * M_PI * unit(rng);
            x[0] += radius * std::cos(phi);
            x[1] += radius * std::sin(phi);
        }
        ++rep.annulus_samples;
        const double v = kernel_truncated(k, profile, s, x, y);
        if (v != 0.0) {
            ++rep.annulus_violations;
            if (!rep.has_witness) {
                rep.has_witness = true;
                rep.witness_scale = s;
                rep.witness_x = x;
                rep.witness_y = y;
            }
        }
    }

    // (b): head truncation of f 1_Q vanishes outside Lambda_d Q
    if (!f.is_zero()) {
        const GridFunction floc = f.restrict_to_cube(q);
        const double lam = static_cast<double>(sc.lambda_d);
        const i64 n_sup = sample_budget - n_annulus;
        for (i64 t = 0; t < n_sup; ++t) {
            Point x{};
            const double half = 0.5 * lam * side;
            const int out_axis = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
            for (int i = 0; i < d; ++i) {
                if (i == out_axis) {
                    // strictly outside Lambda_d Q, inside 3 Lambda_d Q
                    const double m = half * (1.001 + 2.0 * unit(rng));
                    x[i] = center[i] + (rng() % 2 ? m : -m);
                } else {
                    x[i] = center[i] + half * 3.0 * (unit(rng) - 0.5);
                }
            }
            ++rep.support_samples;
            const double v = std::abs(eval_head_upto(k, profile, cap_s, floc, x, quad));
            rep.max_offsupport_value = std::max(rep.max_offsupport_value, v);
            if (v > tol) ++rep.support_violations;
        }
    }
    return rep;
}

}  // namespace czsparse
