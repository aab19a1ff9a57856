#include <benchmark/benchmark.h>
#include <omp.h>

#include "xychain/kernels.hpp"

using namespace xychain;

namespace {

ChainSpec bench_spec(int N) {
  ChainSpec spec;
  spec.N = N;
  spec.gamma = 1.0;
  spec.j_profile = DrivingProfile::exponential(0.5, 2.0, 1.0);
  spec.h_profile = DrivingProfile::constant(1.0);
  return spec;
}

void BM_EvolveSerial(benchmark::State& state) {
  const ChainSpec spec = bench_spec(static_cast<int>(state.range(0)));
  const auto grid = uniform_grid(10.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_modes_serial(spec, grid));
}

void BM_EvolveOmp(benchmark::State& state) {
  const ChainSpec spec = bench_spec(static_cast<int>(state.range(0)));
  const auto grid = uniform_grid(10.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_modes_omp(spec, grid));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ObserveSerial(benchmark::State& state) {
  const ChainSpec spec = bench_spec(static_cast<int>(state.range(0)));
  const auto table = evolve_modes_serial(spec, uniform_grid(10.0, 101));
  const std::vector<int> rs{1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(observe_serial(table, rs));
}

void BM_ObserveOmp(benchmark::State& state) {
  const ChainSpec spec = bench_spec(static_cast<int>(state.range(0)));
  const auto table = evolve_modes_serial(spec, uniform_grid(10.0, 101));
  const std::vector<int> rs{1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(observe_omp(table, rs));
}

}  // namespace

BENCHMARK(BM_EvolveSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveOmp)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObserveSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObserveOmp)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
