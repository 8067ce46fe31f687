#include <benchmark/benchmark.h>

#include "wnoise/gaussian_field.hpp"
#include "wnoise/spde.hpp"

namespace {

wnoise::SpdeProblem problem(std::size_t cells) {
  wnoise::SpdeProblem p;
  p.alpha = wnoise::CoefficientField{wnoise::CoefficientField::Kind::kConstant, 0.5};
  p.sigma = wnoise::CoefficientField{wnoise::CoefficientField::Kind::kConstant, 0.5};
  p.nt = p.nx = cells;
  return p;
}

void BM_SampleOmega(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::sample_omega(11, stream++, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleOmega)->Arg(2000)->Arg(3000);

void BM_SampleNoiseGrid(benchmark::State& state) {
  const std::size_t cells = state.range(0);
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::sample_noise_grid(13, stream++, cells, cells, 1.0, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * cells * cells);
}
BENCHMARK(BM_SampleNoiseGrid)->Arg(64)->Arg(256);

void BM_PicardSweep(benchmark::State& state) {
  const std::size_t cells = state.range(0);
  const auto p = problem(cells);
  const auto grid = wnoise::sample_noise_grid(17, 0, cells, cells, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::picard_oracle(p, grid));
  }
  state.SetComplexityN(cells * cells);
}
BENCHMARK(BM_PicardSweep)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oN);

void BM_SeriesSolution(benchmark::State& state) {
  const std::size_t cells = state.range(0);
  const auto p = problem(cells);
  const auto grid = wnoise::sample_noise_grid(19, 0, cells, cells, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::series_solution(p, grid, 1.0, 1.0));
  }
}
BENCHMARK(BM_SeriesSolution)->Arg(64)->Arg(256);

void BM_SheetCoefficients2D(benchmark::State& state) {
  const double corner[2] = {1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::sheet_coefficients(2, corner, state.range(0)));
  }
}
BENCHMARK(BM_SheetCoefficients2D)->Arg(500)->Arg(3000);

}  // namespace

BENCHMARK_MAIN();
