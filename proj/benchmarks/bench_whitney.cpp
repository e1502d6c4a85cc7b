#include <benchmark/benchmark.h>

#include "czsparse/corpus.hpp"
#include "czsparse/whitney.hpp"

static void BM_WhitneyDecompose1D(benchmark::State& state) {
    const auto sc = czsparse::scale_constants(1);
    const auto omega = czsparse::random_region(1, -12, 42, state.range(0));
    for (auto _ : state) {
        auto cover = czsparse::whitney_decompose(omega, sc, -12);
        benchmark::DoNotOptimize(cover.cubes.data());
    }
}
BENCHMARK(BM_WhitneyDecompose1D)->Arg(1 << 10)->Arg(1 << 13);

static void BM_WhitneyDecompose2D(benchmark::State& state) {
    const auto sc = czsparse::scale_constants(2);
    const auto omega = czsparse::random_region(2, -6, 7, state.range(0));
    for (auto _ : state) {
        auto cover = czsparse::whitney_decompose(omega, sc, -6);
        benchmark::DoNotOptimize(cover.cubes.data());
    }
}
BENCHMARK(BM_WhitneyDecompose2D)->Arg(48 * 48);
