#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "support/dd.hpp"
#include "wnoise/hermite.hpp"
#include "wnoise/quadrature.hpp"
#include "wnoise/rng.hpp"

using namespace wnoise;

namespace {

constexpr double kPiQuarterInv = 0.75112554446494248;  // pi^{-1/4}

// Extended-precision direct evaluation of xi_30(0.7), frozen from the dd
// oracle in support/dd.hpp (definition formula, not the recurrence).
constexpr double kXi30At07 = -0.22836495067797477;

}  // namespace

TEST_CASE("hermite_poly small cases") {
  CHECK(hermite_poly(2, 3.0) == doctest::Approx(8.0));
  CHECK(hermite_poly(0, 17.3) == doctest::Approx(1.0));
  CHECK(hermite_poly(5, 1.0) == doctest::Approx(6.0));  // 1 - 10 + 15
  CHECK(hermite_poly(1, -2.5) == doctest::Approx(-2.5));
  CHECK(hermite_poly(4, 2.0) == doctest::Approx(16.0 - 24.0 + 3.0));
}

TEST_CASE("hermite_poly recurrence consistency") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const double x = -5.0 + 10.0 * uniform_draw(23, s, 0);
    for (unsigned n = 1; n <= 40; ++n) {
      const double residual =
          hermite_poly(n + 1, x) - x * hermite_poly(n, x) + n * hermite_poly(n - 1, x);
      const double scale = std::max({1.0, std::abs(hermite_poly(n + 1, x)),
                                     std::abs(x * hermite_poly(n, x))});
      CHECK(std::abs(residual) / scale < 1e-9);
    }
  }
}

TEST_CASE("hermite_fn base cases") {
  CHECK(hermite_fn(1, 0.0) == doctest::Approx(kPiQuarterInv).epsilon(1e-14));
  CHECK(hermite_fn(2, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(hermite_fn(0, 1.0), std::invalid_argument);
}

TEST_CASE("hermite_fn matches the extended-precision definition at order 30") {
  const double lib = hermite_fn(30, 0.7);
  CHECK(std::abs(lib - kXi30At07) / std::abs(kXi30At07) < 1e-12);
  // regenerate the oracle to guard the frozen constant
  const ddtest::DD oracle = ddtest::dd_hermite_fn(30, 0.7);
  CHECK(std::abs(oracle.hi - kXi30At07) / std::abs(kXi30At07) < 1e-15);
}

TEST_CASE("hermite_fn_upto agrees with single evaluations") {
  const auto values = hermite_fn_upto(50, 1.3);
  for (unsigned n = 1; n <= 50; ++n) {
    CHECK(values[n - 1] == doctest::Approx(hermite_fn(n, 1.3)).epsilon(1e-14));
  }
}

TEST_CASE("orthonormality of the Hermite functions") {
  // xi_n xi_m integrates to delta_nm; Gaussian decay makes [-20, 20] exhaustive.
  double worst = 0.0;
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned m = n; m <= 20; ++m) {
      const double integral = adaptive_gauss_kronrod(
          [&](double x) { return hermite_fn(n, x) * hermite_fn(m, x); }, -20.0, 20.0,
          {1e-10, 40});
      const double expected = n == m ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(integral - expected));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("sup norm decays from order 1 to order 100") {
  auto grid_max = [](unsigned n) {
    double best = 0.0;
    const double hi = std::sqrt(2.0 * n) + 5.0;
    for (double x = 0.0; x <= hi; x += 1e-3) {
      best = std::max(best, std::abs(hermite_fn(n, x)));
    }
    return best;
  };
  CHECK(grid_max(100) < grid_max(1));
}

TEST_CASE("eta tensor products") {
  const auto b11 = BasisIndex::make(1, 1);
  const double u0 = 0.0;
  CHECK(eta(b11, std::span<const double>(&u0, 1)) ==
        doctest::Approx(kPiQuarterInv).epsilon(1e-14));

  const auto b21 = BasisIndex::make(2, 1);
  const double origin[2] = {0.0, 0.0};
  CHECK(eta(b21, origin) == doctest::Approx(kPiQuarterInv * kPiQuarterInv).epsilon(1e-14));

  const auto b22 = BasisIndex::make(2, 2);  // delta = (1,2), xi_2(0) = 0
  CHECK(eta(b22, origin) == doctest::Approx(0.0));
}

TEST_CASE("rectangle integral vanishes on degenerate rectangles") {
  const auto b = BasisIndex::make(2, 5);
  const double corner[2] = {0.0, 1.3};
  CHECK(eta_rectangle_integral(b, corner) == 0.0);
  const double corner2[2] = {1.3, 0.0};
  CHECK(eta_rectangle_integral(b, corner2) == 0.0);
  const double bad[2] = {-0.5, 1.0};
  CHECK_THROWS_AS(eta_rectangle_integral(b, bad), std::domain_error);
}

TEST_CASE("half-line integral of xi_2 against a Riemann oracle") {
  // Brute-force midpoint Riemann sum on [0, 20] at step 1e-4.
  double riemann = 0.0;
  const double h = 1e-4;
  for (long i = 0; i < 200000; ++i) {
    riemann += hermite_fn(2, (static_cast<double>(i) + 0.5) * h) * h;
  }
  const double adaptive = xi_integral(2, 20.0);
  CHECK(std::abs(adaptive - riemann) < 1e-8);
  // closed form sqrt(2) pi^{-1/4}: xi_2 integrates the Gaussian exactly
  CHECK(adaptive == doctest::Approx(std::sqrt(2.0) * kPiQuarterInv).epsilon(1e-12));
}

TEST_CASE("batch integrals agree with the adaptive path") {
  const auto batch = xi_integrals_upto(2000, 1.0);
  for (unsigned n : {1u, 2u, 7u, 40u, 200u, 777u, 2000u}) {
    CHECK(std::abs(batch[n - 1] - xi_integral(n, 1.0)) < 1e-9);
  }
  const auto batch_half = xi_integrals_upto(64, 0.5);
  for (unsigned n = 1; n <= 64; ++n) {
    CHECK(std::abs(batch_half[n - 1] - xi_integral(n, 0.5)) < 1e-9);
  }
}

TEST_CASE("rectangle integral caching returns identical values") {
  const auto b = BasisIndex::make(2, 17);
  const double corner[2] = {0.75, 1.25};
  const double first = eta_rectangle_integral(b, corner);
  const double second = eta_rectangle_integral(b, corner);
  CHECK(first == second);
  // cross-check the tensor factorization against the per-axis integrals
  CHECK(first == doctest::Approx(xi_integral(b.delta[0], 0.75) *
                                 xi_integral(b.delta[1], 1.25)).epsilon(1e-13));
}

TEST_CASE("Parseval partial sums recover min(s, t)") {
  const auto at_half = xi_integrals_upto(2000, 0.5);
  const auto at_one = xi_integrals_upto(2000, 1.0);
  double partial = 0.0;
  double previous_error = 1.0;
  for (unsigned j = 1; j <= 2000; ++j) {
    partial += at_half[j - 1] * at_one[j - 1];
    if (j == 250 || j == 500 || j == 1000 || j == 2000) {
      const double error = std::abs(partial - 0.5);
      CHECK(error < previous_error);
      previous_error = error;
    }
  }
  CHECK(previous_error < 1e-2);
}
