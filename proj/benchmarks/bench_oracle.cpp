#include <benchmark/benchmark.h>

#include <cstdint>

#include "curlicue/oracle.hpp"

namespace {

void BM_TrialDivision(benchmark::State& state) {
    const auto n = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(curlicue::trial_division(n));
}
// A semiprime near 1.3e6, a prime near 1e12 and a smooth number.
BENCHMARK(BM_TrialDivision)->Arg(1308567)->Arg(999999999989)->Arg(1LL << 40);

}  // namespace
