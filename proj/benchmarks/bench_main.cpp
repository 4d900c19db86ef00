#include <benchmark/benchmark.h>

#include <numbers>

#include "alpha_channel/averaging.hpp"
#include "alpha_channel/bounds.hpp"
#include "alpha_channel/kernel.hpp"
#include "alpha_channel/roughness.hpp"

using namespace alpha_channel;

namespace {
const ChannelGeometry unit(1.0, 1.0, 1.0);
}

static void BM_EvalKernel(benchmark::State& state) {
  KernelConfig cfg;
  const double t = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_kernel(unit, 1.0, 0.37, t, cfg));
}
BENCHMARK(BM_EvalKernel)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_DuhamelSpectrum(benchmark::State& state) {
  KernelConfig cfg;
  cfg.tail_tol = 1e-10;
  const auto p = PressureHistory::sinusoid(-1.0, 0.5, 2.0 * std::numbers::pi, 0.0, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        duhamel_spectrum(unit, 1.0, p, 1.0, cfg, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DuhamelSpectrum)->Arg(63)->Arg(255)->Arg(1023);

static void BM_SpectralEvolve(benchmark::State& state) {
  const auto p = PressureHistory::sinusoid(-1.0, 0.5, 2.0 * std::numbers::pi, 0.0, 1.5);
  const auto start = SineSpectrum::zeros(unit, 509);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_evolve(unit, 1.0, p, start, 0.0, 0.1, 1e-4));
}
BENCHMARK(BM_SpectralEvolve);

static void BM_OddSeriesSum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(odd_series_sum(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_OddSeriesSum)->Arg(1000)->Arg(1000000);

static void BM_AlphaUpdate(benchmark::State& state) {
  const RoughnessSpec spec;
  const SineSpectrum u(unit, std::vector<double>(255, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_alpha_update(u, spec, unit));
}
BENCHMARK(BM_AlphaUpdate);
BENCHMARK_MAIN();
