#include <benchmark/benchmark.h>

#include "goldielab/goldie.hpp"
#include "goldielab/stable.hpp"

namespace {

using namespace goldielab;

void BM_GfeResidual(benchmark::State& state) {
  const GoldieParams p{{1.5, -0.5}, {0.8, 1.1}};
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfe_residual(p, x, -3.0));
    x = x < 10.0 ? x + 0.1 : 2.0;
  }
}
BENCHMARK(BM_GfeResidual);

void BM_ChfeResidual(benchmark::State& state) {
  const StableParams p{{-1.0, 0.5}, {1.5, -1.0}, state.range(0) / 100.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(chfe_residual(p, 50, 7.5));
}
BENCHMARK(BM_ChfeResidual)->Arg(-90)->Arg(0)->Arg(100);

void BM_LogCf(benchmark::State& state) {
  const StableParams p{{-1.0, 0.0}, {-0.5, 1.0}, -0.5};
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_cf(p, t));
    t = t < 10.0 ? t + 0.01 : 0.1;
  }
}
BENCHMARK(BM_LogCf);

void BM_Norming(benchmark::State& state) {
  const StableParams p{{-1.0, 0.0}, {-0.5, 1.0}, -0.5};
  int n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(norming(p, n));
    n = n < 50 ? n + 1 : 1;
  }
}
BENCHMARK(BM_Norming);

}  // namespace
