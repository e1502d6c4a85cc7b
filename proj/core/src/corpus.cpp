#include "czsparse/corpus.hpp"

#include <cmath>
#include <random>

namespace czsparse {

Region random_region(int dim, int grid_level, std::uint64_t seed, i64 max_cells) {
    std::mt19937_64 rng(seed);
    std::vector<Anchor> cells;
    if (dim == 1) {
        const i64 extent = std::min<i64>(max_cells, 1 << 14);
        const int pieces = 2 + static_cast<int>(rng() % 4);
        i64 budget = max_cells;
        for (int p = 0; p < pieces && budget > 0; ++p) {
            const i64 len = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(
                                                     std::max<i64>(budget / pieces, 1)));
            const i64 start = static_cast<i64>(rng() % static_cast<std::uint64_t>(extent));
            for (i64 a = start; a < std::min(start + len, extent); ++a)
                cells.push_back(Anchor{a, 0, 0, 0});
            budget -= len;
        }
    } else if (dim == 2) {
        i64 side = 1;
        while ((side + 1) * (side + 1) <= max_cells) ++side;
        const int pieces = 3 + static_cast<int>(rng() % 4);
        for (int p = 0; p < pieces; ++p) {
            const i64 w = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(side));
            const i64 h = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(side));
            const i64 x0 = static_cast<i64>(rng() % static_cast<std::uint64_t>(side));
            const i64 y0 = static_cast<i64>(rng() % static_cast<std::uint64_t>(side));
            for (i64 x = x0; x < std::min(x0 + w, side); ++x)
                for (i64 y = y0; y < std::min(y0 + h, side); ++y)
                    cells.push_back(Anchor{x, y, 0, 0});
        }
    } else {
        throw std::invalid_argument("random_region: d=1,2 only");
    }
    Region r = make_region(dim, grid_level, std::move(cells));
    // trim deterministically if the union overshot
    if (r.cell_count() > max_cells) r.cells.resize(static_cast<size_t>(max_cells));
    return r;
}

GridFunction random_function(int dim, int grid_level, const GridBox& window, std::uint64_t seed,
                             const std::string& style) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    i64 n = 1;
    for (int i = 0; i < dim; ++i) n *= window.width;
    std::vector<double> v(n, 0.0);

    if (style == "uniform") {
        for (auto& x : v) x = 0.05 + 0.95 * unit(rng);
    } else if (style == "smooth") {
        const double w1 = 1.0 + 3.0 * unit(rng), w2 = 1.0 + 5.0 * unit(rng);
        const double p1 = 6.28 * unit(rng), p2 = 6.28 * unit(rng);
        for (i64 i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(n);
            const double s = std::sin(w1 * 6.28 * t + p1) + 0.6 * std::sin(w2 * 6.28 * t + p2);
            v[i] = s * s + 0.01;
        }
    } else if (style == "spiky") {
        for (auto& x : v) x = std::exp(1.2 * gauss(rng)) * 0.05;
        const int bumps = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < bumps; ++b) {
            const i64 center = static_cast<i64>(rng() % static_cast<std::uint64_t>(n));
            const i64 halfw = 4 + static_cast<i64>(rng() % 40);
            const double height = 20.0 * std::exp(1.5 * unit(rng));
            for (i64 i = std::max<i64>(0, center - halfw);
                 i < std::min<i64>(n, center + halfw); ++i) {
                const double t = static_cast<double>(i - center) / static_cast<double>(halfw);
                v[i] += height * std::exp(-3.0 * t * t);
            }
        }
    } else if (style == "mounds") {
        // broad concentrated mounds over a faint floor; wide enough stopping
        // regions for the covering recursion to descend a few generations
        for (auto& x : v) x = 0.01 + 0.02 * unit(rng);
        const int bumps = 1 + static_cast<int>(rng() % 2);
        for (int b = 0; b < bumps; ++b) {
            const double center =
                0.15 * static_cast<double>(n) + 0.7 * static_cast<double>(n) * unit(rng);
            const double sigma = 0.03 * static_cast<double>(n) * (1.0 + 2.0 * unit(rng));
            const double height = 3.0 + 40.0 * unit(rng);
            const double peak2 = 0.002 * static_cast<double>(n);
            for (i64 i = 0; i < n; ++i) {
                const double t = (static_cast<double>(i) - center) / sigma;
                const double s = (static_cast<double>(i) - center) / peak2;
                v[i] += height * std::exp(-0.5 * t * t) + 8.0 * height * std::exp(-0.5 * s * s);
            }
        }
    } else {
        throw std::invalid_argument("random_function: unknown style '" + style + "'");
    }
    return GridFunction(dim, grid_level, window, std::move(v));
}

}  // namespace czsparse
