#include <benchmark/benchmark.h>

#include "wnoise/hermite.hpp"

namespace {

void BM_HermiteFn(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::hermite_fn(order, x));
    x += 1e-9;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermiteFn)->RangeMultiplier(10)->Range(10, 10000)->Complexity(benchmark::oN);

void BM_HermitePolyUpto(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::hermite_poly_upto(order, 1.7));
  }
}
BENCHMARK(BM_HermitePolyUpto)->Arg(20)->Arg(200);

void BM_XiIntegralAdaptive(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  double endpoint = 1.0;
  for (auto _ : state) {
    // vary the endpoint to defeat the (order, endpoint) cache
    endpoint += 1e-9;
    benchmark::DoNotOptimize(wnoise::xi_integral(order, endpoint));
  }
}
BENCHMARK(BM_XiIntegralAdaptive)->Arg(8)->Arg(64)->Arg(512);

void BM_XiIntegralsBatch(benchmark::State& state) {
  const unsigned nmax = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::xi_integrals_upto(nmax, 1.0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_XiIntegralsBatch)->RangeMultiplier(4)->Range(125, 8000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
