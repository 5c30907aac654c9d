#include <benchmark/benchmark.h>

#include "curlicue/expsum.hpp"

namespace {

void BM_Intensity(benchmark::State& state) {
    const curlicue::SumSpec spec(static_cast<int>(state.range(0)), 2);
    double xi = 1137.123;
    for (auto _ : state) {
        benchmark::DoNotOptimize(curlicue::intensity(spec, xi));
        xi += 1e-4;
    }
}
BENCHMARK(BM_Intensity)->Arg(2)->Arg(3)->Arg(10)->Arg(100);

void BM_MainLobeHalfwidth(benchmark::State& state) {
    const curlicue::SumSpec spec(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(curlicue::main_lobe_halfwidth(spec));
}
BENCHMARK(BM_MainLobeHalfwidth)->Arg(3)->Arg(10);

}  // namespace
