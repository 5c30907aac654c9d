#include <benchmark/benchmark.h>

#include "curlicue/interferometer.hpp"

namespace {

const curlicue::InterferometerConfig kConfig{0.0, 523426.8, curlicue::SumSpec(3, 2)};

void BM_SimulateNoiseless(benchmark::State& state) {
    const curlicue::SpectralWindow window{460.36, 463.24, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(curlicue::simulate(kConfig, window, std::nullopt));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateNoiseless)->Arg(2048)->Arg(1 << 16);

void BM_SimulateNoisy(benchmark::State& state) {
    const curlicue::SpectralWindow window{460.36, 463.24, static_cast<int>(state.range(0))};
    const curlicue::NoiseModel noise{10.0, {}, 0.01, 42};
    for (auto _ : state) {
        benchmark::DoNotOptimize(curlicue::simulate(kConfig, window, noise));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateNoisy)->Arg(2048)->Arg(1 << 16);

}  // namespace
