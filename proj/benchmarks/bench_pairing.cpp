#include <benchmark/benchmark.h>

#include "czsparse/corpus.hpp"
#include "czsparse/pairing.hpp"

static void BM_HilbertPairing(benchmark::State& state) {
    const auto k = czsparse::make_kernel("hilbert");
    czsparse::BumpProfile prof;
    const czsparse::GridBox win(1, -10, czsparse::Anchor{0, 0, 0, 0}, state.range(0));
    const auto f1 = czsparse::random_function(1, -10, win, 1, "uniform");
    const auto f2 = czsparse::random_function(1, -10, win, 2, "uniform");
    for (auto _ : state) {
        auto r = czsparse::pair_bilinear(czsparse::PairMode::Full, 0, k, prof, f1, f2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_HilbertPairing)->Arg(1 << 8)->Arg(1 << 10)->Arg(1 << 12);
