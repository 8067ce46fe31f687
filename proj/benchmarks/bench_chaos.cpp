#include <benchmark/benchmark.h>

#include <cstdint>

#include "wnoise/chaos.hpp"
#include "wnoise/rng.hpp"

namespace {

wnoise::ChaosExpansion random_expansion(std::uint64_t seed, std::size_t terms,
                                        std::size_t width, std::uint32_t max_entry) {
  wnoise::ChaosExpansion f(1);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> entries(width);
    for (std::size_t i = 0; i < width; ++i) {
      entries[i] = static_cast<std::uint32_t>(
          wnoise::uniform_draw(seed, t, i) * (max_entry + 1));
    }
    f.set_coefficient(wnoise::MultiIndex(std::move(entries)),
                      wnoise::uniform_draw(seed, t, 15) - 0.5);
  }
  return f;
}

void BM_WickProduct(benchmark::State& state) {
  const auto f = random_expansion(2, state.range(0), 6, 4);
  const auto g = random_expansion(3, state.range(0), 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::wick_product(f, g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WickProduct)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_WickExp(benchmark::State& state) {
  const double a[3] = {0.6, -0.48, 0.64};
  const auto w = wnoise::ChaosExpansion::first_chaos(1, a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::wick_exp(w, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_WickExp)->Arg(8)->Arg(20);

void BM_Evaluate(benchmark::State& state) {
  const double a[3] = {0.6, -0.48, 0.64};
  const auto series = wnoise::wick_exp(wnoise::ChaosExpansion::first_chaos(1, a), 20).series;
  std::uint64_t stream = 0;
  for (auto _ : state) {
    const auto omega = wnoise::sample_omega(7, stream++, 3);
    benchmark::DoNotOptimize(wnoise::evaluate(series, omega));
  }
}
BENCHMARK(BM_Evaluate);

void BM_HidaNorm(benchmark::State& state) {
  const auto f = random_expansion(5, 512, 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnoise::hida_norm_sq(f, 2.0));
  }
}
BENCHMARK(BM_HidaNorm);

}  // namespace

BENCHMARK_MAIN();
