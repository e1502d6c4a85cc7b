#include <benchmark/benchmark.h>

#include "czsparse/corpus.hpp"
#include "czsparse/maximal.hpp"

static void BM_LatticeMaximal1D(benchmark::State& state) {
    const czsparse::GridBox win(1, -12, czsparse::Anchor{0, 0, 0, 0}, state.range(0));
    const auto f = czsparse::random_function(1, -12, win, 5, "spiky");
    for (auto _ : state) {
        auto m = czsparse::lattice_maximal(f, win);
        benchmark::DoNotOptimize(m.values().data());
    }
}
BENCHMARK(BM_LatticeMaximal1D)->Arg(1 << 9)->Arg(1 << 11);

static void BM_SuperlevelOfMaximal1D(benchmark::State& state) {
    const czsparse::GridBox win(1, -12, czsparse::Anchor{0, 0, 0, 0}, state.range(0));
    const auto f = czsparse::random_function(1, -12, win, 5, "spiky");
    const double t = 2.0 * static_cast<double>(czsparse::average(f, win));
    for (auto _ : state) {
        auto r = czsparse::superlevel_of_maximal(f, win, t);
        benchmark::DoNotOptimize(r.cells.data());
    }
}
BENCHMARK(BM_SuperlevelOfMaximal1D)->Arg(1 << 11)->Arg(1 << 14);
