#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wnoise/hermite.hpp"
#include "wnoise/malliavin.hpp"
#include "wnoise/rng.hpp"

using namespace wnoise;

TEST_CASE("first-chaos derivative recovers the integrand coefficients") {
  const std::vector<double> a = {0.5, -1.5, 0.0, 2.25};
  const ChaosExpansion f = ChaosExpansion::first_chaos(1, a);
  const MalliavinDerivative d = hm_derivative(f);
  for (std::size_t k = 1; k <= 4; ++k) {
    const ChaosExpansion component = d.component(k);
    if (a[k - 1] == 0.0) {
      CHECK(component.is_zero());
    } else {
      CHECK(component == ChaosExpansion::constant(1, a[k - 1]));
    }
  }
  CHECK(d.component(7).is_zero());
}

TEST_CASE("derivative of a second-order term") {
  const ChaosExpansion f = ChaosExpansion::basis_term(1, MultiIndex{2});
  const MalliavinDerivative d = hm_derivative(f);
  CHECK(d.component(1) == ChaosExpansion::basis_term(1, MultiIndex::unit(1), 2.0));
  CHECK(d.components().size() == 1);

  CHECK(hm_derivative(ChaosExpansion::constant(1, 3.0)).components().empty());
}

TEST_CASE("hm_derivative is linear on coefficients") {
  ChaosExpansion f(1);
  f.set_coefficient(MultiIndex{2, 1}, 0.5);
  f.set_coefficient(MultiIndex{1}, -1.0);
  ChaosExpansion g(1);
  g.set_coefficient(MultiIndex{0, 3}, 0.25);
  g.set_coefficient(MultiIndex{1}, 2.0);

  const MalliavinDerivative d_combo = hm_derivative(2.0 * f + (-3.0) * g);
  const MalliavinDerivative d_f = hm_derivative(f);
  const MalliavinDerivative d_g = hm_derivative(g);
  for (std::size_t k = 1; k <= 3; ++k) {
    const ChaosExpansion expected = 2.0 * d_f.component(k) + (-3.0) * d_g.component(k);
    CHECK(d_combo.component(k) == expected);
  }
}

TEST_CASE("directional derivative of linear functionals is exact") {
  const ChaosExpansion f = ChaosExpansion::basis_term(1, MultiIndex::unit(1));
  const OmegaSample omega = sample_omega(5, 0, 2);
  const std::vector<double> direction = {1.0, 0.0};
  for (double step : {1.0, 1e-3, 1e-7}) {
    CHECK(directional_derivative(f, direction, omega, step) == doctest::Approx(1.0));
  }
}

TEST_CASE("directional derivative of h_2 matches the analytic derivative") {
  const ChaosExpansion f = ChaosExpansion::basis_term(1, MultiIndex{2});
  OmegaSample omega;
  omega.theta = {1.0};
  const std::vector<double> direction = {1.0};
  const double fd = directional_derivative(f, direction, omega, 1e-5);
  CHECK(std::abs(fd - 2.0) < 1e-4);  // d/dtheta h_2 = 2 theta
}

TEST_CASE("finite differences agree with the derivative pairing to O(step)") {
  // Richardson extrapolation cancels the leading error term, so the
  // extrapolated value pins the pairing and the raw error scales linearly.
  ChaosExpansion f(1);
  f.set_coefficient(MultiIndex{2}, 0.75);       // quadratic part keeps C away from 0
  f.set_coefficient(MultiIndex{1, 2}, -0.5);
  f.set_coefficient(MultiIndex{0, 1, 1}, 0.25);
  const MalliavinDerivative d = hm_derivative(f);

  for (std::uint64_t probe = 0; probe < 20; ++probe) {
    const OmegaSample omega = sample_omega(7, probe, 3);
    std::vector<double> direction(3);
    for (std::size_t i = 0; i < 3; ++i) {
      direction[i] = -1.0 + 2.0 * uniform_draw(9, probe, i);
    }
    const double pairing = d.pair(direction, omega);

    const double fd1 = directional_derivative(f, direction, omega, 1e-3);
    const double fd2 = directional_derivative(f, direction, omega, 5e-4);
    const double richardson = 2.0 * fd2 - fd1;
    CHECK(std::abs(richardson - pairing) < 1e-6 * std::max(1.0, std::abs(pairing)));

    double previous_c = -1.0;
    for (double step : {1e-3, 1e-4, 1e-5}) {
      const double err = std::abs(directional_derivative(f, direction, omega, step) - pairing);
      const double c = err / step;
      if (previous_c > 1e-6) {
        CHECK(c < 2.0 * previous_c + 1e-3);
        CHECK(c > 0.5 * previous_c - 1e-3);
      }
      previous_c = c;
    }
  }
}

TEST_CASE("ordinary products linearize Hermite squares") {
  const ChaosExpansion h1 = ChaosExpansion::basis_term(1, MultiIndex::unit(1));
  ChaosExpansion expected(1);
  expected.set_coefficient(MultiIndex{2}, 1.0);
  expected.set_coefficient(MultiIndex{}, 1.0);
  CHECK(ordinary_product(h1, h1) == expected);  // h_1^2 = h_2 + 1

  // cross-position terms multiply freely
  const ChaosExpansion h2pos = ChaosExpansion::basis_term(1, MultiIndex::unit(2));
  CHECK(ordinary_product(h1, h2pos) == ChaosExpansion::basis_term(1, MultiIndex{1, 1}));

  // h_2 * h_1 = h_3 + 2 h_1
  const ChaosExpansion h2 = ChaosExpansion::basis_term(1, MultiIndex{2});
  ChaosExpansion expected2(1);
  expected2.set_coefficient(MultiIndex{3}, 1.0);
  expected2.set_coefficient(MultiIndex{1}, 2.0);
  CHECK(ordinary_product(h2, h1) == expected2);
}

TEST_CASE("ordinary products are pointwise products") {
  ChaosExpansion f(1);
  f.set_coefficient(MultiIndex{2}, 0.5);
  f.set_coefficient(MultiIndex{1, 1}, -0.75);
  f.set_coefficient(MultiIndex{}, 0.25);
  ChaosExpansion g(1);
  g.set_coefficient(MultiIndex{1}, 1.5);
  g.set_coefficient(MultiIndex{0, 2}, 0.5);
  const ChaosExpansion product = ordinary_product(f, g);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const OmegaSample omega = sample_omega(11, s, 2);
    const double direct = evaluate(f, omega) * evaluate(g, omega);
    CHECK(evaluate(product, omega) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("chain rule: identity map has zero gap") {
  ChaosExpansion f(1);
  f.set_coefficient(MultiIndex{2}, 1.0);
  f.set_coefficient(MultiIndex{1}, -0.5);
  const double identity[2] = {0.0, 1.0};
  const ChainRuleReport report = chain_rule_check(f, identity, 13);
  CHECK(report.max_relative_gap == 0.0);
}

TEST_CASE("chain rule: squares of first-chaos elements") {
  const ChaosExpansion f = ChaosExpansion::basis_term(1, MultiIndex::unit(1));
  const double square[3] = {0.0, 0.0, 1.0};
  const ChainRuleReport report = chain_rule_check(f, square, 17);
  CHECK(report.max_relative_gap < 1e-10);
  // phi(F) = F^2 = H_2 + 1 exactly
  const double probe[3] = {1.0, 0.0, 1.0};
  ChaosExpansion composed = polynomial_apply(std::span<const double>(probe, 3), f);
  CHECK(composed.coefficient(MultiIndex{2}) == doctest::Approx(1.0));
  CHECK(composed.coefficient(MultiIndex{}) == doctest::Approx(2.0));
}

TEST_CASE("chain rule: cubic map on a unit direction") {
  const double a[3] = {0.48, -0.6, 0.64};  // unit norm
  const ChaosExpansion w = ChaosExpansion::first_chaos(1, a);
  const double cubic[4] = {0.0, 0.0, 0.0, 1.0};
  const ChainRuleReport report = chain_rule_check(w, cubic, 19);
  CHECK(report.max_relative_gap < 1e-8);
}

TEST_CASE("chain rule rejects oversized inputs") {
  const ChaosExpansion f = ChaosExpansion::basis_term(1, MultiIndex{4});
  const double identity[2] = {0.0, 1.0};
  CHECK_THROWS_AS(chain_rule_check(f, identity, 23), std::domain_error);
  const ChaosExpansion ok = ChaosExpansion::basis_term(1, MultiIndex{2});
  const double quintic[6] = {0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(chain_rule_check(ok, quintic, 23), std::domain_error);
}

TEST_CASE("Clark-Ocone: terminal value reconstructs exactly") {
  const std::size_t steps[2] = {64, 256};
  const auto rows =
      clark_ocone_reconstruct(ClarkOconeCase::kBrownianTerminal, steps, 500, 29);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.rms_error == 0.0);
    CHECK(row.mean_abs_error == 0.0);
  }
}

TEST_CASE("Clark-Ocone: squared terminal value converges at rate one") {
  const std::size_t steps[3] = {256, 512, 1024};
  const auto rows =
      clark_ocone_reconstruct(ClarkOconeCase::kBrownianTerminalSquared, steps, 4000, 31);
  REQUIRE(rows.size() == 3);
  // E (T - sum dB^2)^2 = 2 T^2 / n
  for (const auto& row : rows) {
    const double expected = std::sqrt(2.0 / static_cast<double>(row.steps));
    CHECK(row.rms_error == doctest::Approx(expected).epsilon(0.15));
  }
  const double ms_ratio = (rows[1].rms_error * rows[1].rms_error) /
                          (rows[0].rms_error * rows[0].rms_error);
  CHECK(ms_ratio > 0.4);
  CHECK(ms_ratio < 0.6);
}

TEST_CASE("Clark-Ocone: Wick exponential reconstructs within tolerance") {
  const std::size_t steps[3] = {1024, 2048, 4096};
  const auto rows =
      clark_ocone_reconstruct(ClarkOconeCase::kWickExponential, steps, 2000, 37);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].rms_error < 5e-2);
  CHECK(rows[2].rms_error < rows[1].rms_error);
  CHECK(rows[1].rms_error < rows[0].rms_error);
}
