#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "curlicue/analysis.hpp"
#include "curlicue/interferometer.hpp"

namespace {

const curlicue::Interferogram& demo() {
    static const auto ig = curlicue::simulate({0.0, 523426.8, curlicue::SumSpec(3, 2)},
                                              {460.36, 463.24, 2048}, std::nullopt);
    return ig;
}

void BM_DetectPeaks(benchmark::State& state) {
    const auto& ig = demo();
    for (auto _ : state) benchmark::DoNotOptimize(curlicue::detect_peaks(ig));
}
BENCHMARK(BM_DetectPeaks);

void BM_ScanTargets(benchmark::State& state) {
    const auto& ig = demo();
    std::vector<std::int64_t> targets(static_cast<std::size_t>(state.range(0)));
    std::iota(targets.begin(), targets.end(), std::int64_t{1'250'000});
    for (auto _ : state) benchmark::DoNotOptimize(curlicue::scan_targets(ig, targets));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanTargets)->Arg(100)->Arg(10000);

}  // namespace
