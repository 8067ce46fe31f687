/*
 * Copyright 2026 The wnoise authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WNOISE_MALLIAVIN_HPP
#define WNOISE_MALLIAVIN_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wnoise/chaos.hpp"

namespace wnoise {

/// The stochastic gradient D_x F = sum_k eta_k(x) F_k of a chaos element,
/// stored by its basis components F_k (each a ChaosExpansion of the same
/// parameter dimension).
class MalliavinDerivative {
 public:
  explicit MalliavinDerivative(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }
  const std::map<std::size_t, ChaosExpansion>& components() const noexcept {
    return components_;
  }
  /// Component F_k at 1-based basis position k (zero element if absent).
  ChaosExpansion component(std::size_t k) const;
  void set_component(std::size_t k, ChaosExpansion f);

  /// Pointwise value (D_x F)(omega) = sum_k eta_k(x) F_k(omega).
  double value_at(std::span<const double> x, const OmegaSample& omega) const;

  /// The pairing int D_x F gamma(x) dx = sum_k g_k F_k(omega) for a direction
  /// gamma = sum_k g_k eta_k.
  double pair(std::span<const double> direction, const OmegaSample& omega) const;

 private:
  std::size_t dimension_;
  std::map<std::size_t, ChaosExpansion> components_;
};

/// Chaos-expansion form of the derivative:
/// D_x F = sum_alpha sum_k c_alpha alpha_k eta_k(x) H_{alpha - eps(k)}.
/// Exact on coefficients and linear in F.
MalliavinDerivative hm_derivative(const ChaosExpansion& f);

/// Forward difference [F(omega + step*gamma) - F(omega)] / step, where the
/// shifted sample has coordinates theta_i + step * direction_i.
double directional_derivative(const ChaosExpansion& f, std::span<const double> direction,
                              const OmegaSample& omega, double step);

/// Pointwise (non-Wick) product, linearized back into the Hermite basis with
/// the exact integer coefficients of h_m h_n = sum_k C(m,k) C(n,k) k!
/// h_{m+n-2k} applied per position.
ChaosExpansion ordinary_product(const ChaosExpansion& f, const ChaosExpansion& g);

/// phi(F) = sum_m coeffs[m] F^m with ordinary (pointwise) powers.
ChaosExpansion polynomial_apply(std::span<const double> coeffs, const ChaosExpansion& f);

struct ChainRuleReport {
  double max_relative_gap = 0.0;
  std::size_t probes = 0;
};

/// Compares D(phi(F)) against phi'(F) * D F at random (x, omega) probes.
/// Requires deg(phi) <= 4 and max_degree(F) <= 3 so the exact chaos
/// composition stays small; otherwise throws std::domain_error.
ChainRuleReport chain_rule_check(const ChaosExpansion& f, std::span<const double> phi,
                                 std::uint64_t seed, std::size_t probes = 100);

enum class ClarkOconeCase {
  kBrownianTerminal,         // F = B(T)
  kBrownianTerminalSquared,  // F = B(T)^2
  kWickExponential,          // F = exp<>(int_0^T dB) = exp(B(T) - T/2)
};

struct ClarkOconeRow {
  std::size_t steps = 0;
  std::size_t paths = 0;
  double rms_error = 0.0;
  double mean_abs_error = 0.0;
};

/// Pathwise reconstruction F = E[F] + int_0^T E[D_t F | F_t] dB(t) for the
/// closed-form cases above, on each step count in `steps_list`.
std::vector<ClarkOconeRow> clark_ocone_reconstruct(ClarkOconeCase which,
                                                   std::span<const std::size_t> steps_list,
                                                   std::size_t paths, std::uint64_t seed,
                                                   double extent = 1.0);

}  // namespace wnoise

#endif  // WNOISE_MALLIAVIN_HPP
