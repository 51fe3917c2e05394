#include <benchmark/benchmark.h>

#include "goldielab/quadrature.hpp"

namespace {

using namespace goldielab;

void BM_GammaReal(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_real(x));
    x = x < 1.99 ? x + 0.01 : 0.01;
  }
}
BENCHMARK(BM_GammaReal);

void BM_AbelQuad(benchmark::State& state) {
  const double delta = state.range(0) / 100.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(abel_integral_quad(0.5, delta, 1e-9));
}
BENCHMARK(BM_AbelQuad)->Arg(100)->Arg(1)->Arg(0);

void BM_AbelRatioExtrapolated(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(abel_ratio(0.25, RatioMethod::extrapolated));
}
BENCHMARK(BM_AbelRatioExtrapolated);

void BM_TailPartsIdentity(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tail_parts_identity_check(0.5, 0.1, 50.0));
}
BENCHMARK(BM_TailPartsIdentity);

}  // namespace
