#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wnoise/ito.hpp"
#include "wnoise/parallel.hpp"

using namespace wnoise;

TEST_CASE("ito_1d telescopes for constant integrands") {
  const BrownianPath1D path = sample_path_1d(3, 0, 128, 1.0);
  const auto one = AdaptedProcess1D::deterministic(128, 1.0, [](double) { return 1.0; });
  double total = 0.0;
  for (double db : path.increments) total += db;
  CHECK(ito_1d(one, path) == doctest::Approx(total).epsilon(1e-15));

  const auto zero = AdaptedProcess1D::deterministic(128, 1.0, [](double) { return 0.0; });
  CHECK(ito_1d(zero, path) == 0.0);

  const auto short_y = AdaptedProcess1D::deterministic(64, 1.0, [](double) { return 1.0; });
  CHECK_THROWS_AS(ito_1d(short_y, path), std::domain_error);
}

TEST_CASE("integral of B dB approaches the closed form at rate one") {
  // E (sum B dB - (B_T^2 - T)/2)^2 = T^2 / (2 n): halves per step doubling.
  auto mean_square_gap = [](std::size_t steps, std::uint64_t seed) {
    const auto sums = chunked_reduce<MomentSums>(
        10000, 512,
        [&](std::uint64_t begin, std::uint64_t end) {
          MomentSums local;
          for (std::uint64_t p = begin; p < end; ++p) {
            const BrownianPath1D path = sample_path_1d(seed, p, steps, 1.0);
            const auto b = AdaptedProcess1D::from_sweep(
                path, [](std::size_t, std::span<const double> past) {
                  double node = 0.0;
                  for (double db : past) node += db;
                  return node;
                });
            const double integral = ito_1d(b, path);
            const auto nodes = path.nodes();
            const double closed = 0.5 * nodes.back() * nodes.back() - 0.5;
            const double gap = integral - closed;
            local.add(gap * gap);
          }
          return local;
        },
        MomentSums{}, [](MomentSums acc, MomentSums part) { return acc.merge(part); });
    return sums.mean();
  };
  const double coarse = mean_square_gap(256, 71);
  const double fine = mean_square_gap(512, 73);
  CHECK(coarse == doctest::Approx(1.0 / 512.0).epsilon(0.1));
  const double ratio = fine / coarse;
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
}

TEST_CASE("ito_2d telescopes and checks shapes") {
  const NoiseGrid2D grid = sample_noise_grid(79, 0, 12, 12, 1.0, 1.0);
  const auto one = AdaptedProcess2D::deterministic(grid, [](double, double) { return 1.0; });
  CHECK(ito_2d(one, grid) == doctest::Approx(sheet_from_grid(grid, 12, 12)).epsilon(1e-12));

  const NoiseGrid2D other = sample_noise_grid(79, 0, 12, 10, 1.0, 1.0);
  CHECK_THROWS_AS(ito_2d(one, other), std::domain_error);
}

TEST_CASE("ito_2d of a deterministic field is Gaussian with the grid norm") {
  auto sigma = [](double t, double x) { return 1.0 + 0.5 * t - 0.25 * x; };
  const NoiseGrid2D probe = sample_noise_grid(83, 0, 16, 16, 1.0, 1.0);
  const auto field = AdaptedProcess2D::deterministic(probe, sigma);
  double norm_sq = 0.0;
  for (double v : field.values()) norm_sq += v * v * probe.dt * probe.dx;

  const auto sums = chunked_reduce<MomentSums>(
      100000, 2048,
      [&](std::uint64_t begin, std::uint64_t end) {
        MomentSums local;
        for (std::uint64_t p = begin; p < end; ++p) {
          const NoiseGrid2D g = sample_noise_grid(89, p, 16, 16, 1.0, 1.0);
          const auto y = AdaptedProcess2D::deterministic(g, sigma);
          local.add(ito_2d(y, g));
        }
        return local;
      },
      MomentSums{}, [](MomentSums acc, MomentSums part) { return acc.merge(part); });
  CHECK(std::abs(sums.mean()) < 3.0 * sums.std_error());
  CHECK(std::abs(sums.variance() - norm_sq) < 3.0 * norm_sq * std::sqrt(2.0 / 100000.0));
}

TEST_CASE("adapted integrands give zero-mean integrals") {
  const auto sums = chunked_reduce<MomentSums>(
      100000, 2048,
      [&](std::uint64_t begin, std::uint64_t end) {
        MomentSums local;
        for (std::uint64_t p = begin; p < end; ++p) {
          const NoiseGrid2D g = sample_noise_grid(97, p, 12, 12, 1.0, 1.0);
          // Y_ij = sheet value at the cell's lower-left node: adapted by sweep
          const auto y = AdaptedProcess2D::from_sweep(
              g, [](const AdaptedProcess2D::Past& past) {
                return past.sheet(past.i(), past.j());
              });
          local.add(ito_2d(y, g));
        }
        return local;
      },
      MomentSums{}, [](MomentSums acc, MomentSums part) { return acc.merge(part); });
  CHECK(std::abs(sums.mean()) < 3.0 * sums.std_error());
}

TEST_CASE("ito_2d is linear in the integrand") {
  const NoiseGrid2D g = sample_noise_grid(101, 5, 10, 10, 1.0, 1.0);
  const auto y1 = AdaptedProcess2D::deterministic(g, [](double t, double x) { return t + x; });
  const auto y2 =
      AdaptedProcess2D::deterministic(g, [](double t, double x) { return t * x - 0.5; });
  const auto combo = AdaptedProcess2D::deterministic(
      g, [](double t, double x) { return 2.0 * (t + x) - 3.0 * (t * x - 0.5); });
  CHECK(ito_2d(combo, g) ==
        doctest::Approx(2.0 * ito_2d(y1, g) - 3.0 * ito_2d(y2, g)).epsilon(1e-12));
}

TEST_CASE("the sweep window refuses non-past reads") {
  const NoiseGrid2D g = sample_noise_grid(103, 0, 4, 4, 1.0, 1.0);
  CHECK_THROWS_AS(AdaptedProcess2D::from_sweep(
                      g,
                      [](const AdaptedProcess2D::Past& past) {
                        return past.increment(past.i(), past.j());  // not strict past
                      }),
                  std::domain_error);
  // sheet at the own node is allowed (uses only the strict past)
  const auto ok = AdaptedProcess2D::from_sweep(g, [](const AdaptedProcess2D::Past& past) {
    return past.sheet(past.i(), past.j());
  });
  CHECK(ok.values().size() == 16);
}

TEST_CASE("wick demo ties the three routes together") {
  const WickItoReport report = wick_ito_demo(1.0, 4096, 11);
  // closed form and chaos algebra are exact functions of B(T) and T
  CHECK(std::abs(report.gap_formula_wick) <=
        1e-9 * std::max(1.0, std::abs(report.ito_formula)));
  // the discrete integral is close at this resolution (SD = T / sqrt(2n))
  CHECK(std::abs(report.gap_integral_formula) < 0.1);

  const WickItoReport degenerate = wick_ito_demo(0.0, 64, 11);
  CHECK(degenerate.ito_integral == 0.0);
  CHECK(degenerate.ito_formula == 0.0);
  CHECK(degenerate.wick_square == 0.0);
}

TEST_CASE("wick demo refinement shrinks the discrete gap in mean square") {
  MomentSums coarse, fine;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const WickItoReport a = wick_ito_demo(1.0, 64, seed);
    const WickItoReport b = wick_ito_demo(1.0, 512, seed);
    coarse.add(a.gap_integral_formula * a.gap_integral_formula);
    fine.add(b.gap_integral_formula * b.gap_integral_formula);
  }
  // expected mean squares: 1/(2*64) vs 1/(2*512)
  CHECK(fine.mean() < coarse.mean());
  CHECK(coarse.mean() == doctest::Approx(1.0 / 128.0).epsilon(0.3));
}
