#include <benchmark/benchmark.h>

#include "tetralat/tasep.hpp"

using namespace tetralat;

static void bm_tasep_kernel(benchmark::State& state) {
  // n=3, L=5 sector with 60 configurations
  TasepSector sec{3, {2, 1, 1, 1}};
  for (auto _ : state) {
    auto ss = steady_state_kernel(sec);
    benchmark::DoNotOptimize(ss);
  }
}
BENCHMARK(bm_tasep_kernel);

static void bm_tasep_kernel_L6(benchmark::State& state) {
  // n=3, L=6 sector with 180 configurations
  TasepSector sec{3, {3, 1, 1, 1}};
  for (auto _ : state) {
    auto ss = steady_state_kernel(sec);
    benchmark::DoNotOptimize(ss);
  }
}
BENCHMARK(bm_tasep_kernel_L6);

static void bm_tasep_trace(benchmark::State& state) {
  TasepSector sec{3, {2, 1, 1, 1}};
  TasepConfig cfg{3, 0, 0, 2, 1};
  for (auto _ : state) {
    Rational v = steady_state_trace(sec, cfg);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_tasep_trace);

BENCHMARK_MAIN();
