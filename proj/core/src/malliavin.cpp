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

#include "wnoise/malliavin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wnoise/hermite.hpp"
#include "wnoise/parallel.hpp"
#include "wnoise/rng.hpp"

namespace wnoise {

ChaosExpansion MalliavinDerivative::component(std::size_t k) const {
  auto it = components_.find(k);
  if (it != components_.end()) return it->second;
  return ChaosExpansion(dimension_);
}

void MalliavinDerivative::set_component(std::size_t k, ChaosExpansion f) {
  if (f.dimension() != dimension_) {
    throw std::domain_error("MalliavinDerivative: component dimension mismatch");
  }
  if (f.is_zero()) {
    components_.erase(k);
  } else {
    components_.insert_or_assign(k, std::move(f));
  }
}

double MalliavinDerivative::value_at(std::span<const double> x,
                                     const OmegaSample& omega) const {
  double sum = 0.0;
  for (const auto& [k, f_k] : components_) {
    const BasisIndex basis = BasisIndex::make(dimension_, k);
    sum += eta(basis, x) * evaluate(f_k, omega);
  }
  return sum;
}

double MalliavinDerivative::pair(std::span<const double> direction,
                                 const OmegaSample& omega) const {
  double sum = 0.0;
  for (const auto& [k, f_k] : components_) {
    if (k > direction.size()) continue;
    const double g_k = direction[k - 1];
    if (g_k != 0.0) sum += g_k * evaluate(f_k, omega);
  }
  return sum;
}

MalliavinDerivative hm_derivative(const ChaosExpansion& f) {
  MalliavinDerivative d(f.dimension());
  std::map<std::size_t, ChaosExpansion> components;
  for (const auto& [alpha, c] : f.terms()) {
    const auto& entries = alpha.entries();
    for (std::size_t pos = 1; pos <= entries.size(); ++pos) {
      const std::uint32_t a_k = entries[pos - 1];
      if (a_k == 0) continue;
      auto [it, inserted] = components.try_emplace(pos, f.dimension());
      it->second += ChaosExpansion::basis_term(
          f.dimension(), subtract_unit(alpha, pos), c * static_cast<double>(a_k));
    }
  }
  for (auto& [k, f_k] : components) {
    d.set_component(k, std::move(f_k));
  }
  return d;
}

double directional_derivative(const ChaosExpansion& f, std::span<const double> direction,
                              const OmegaSample& omega, double step) {
  if (!(step > 0.0)) throw std::domain_error("directional_derivative: step must be positive");
  if (direction.size() > omega.truncation()) {
    throw std::domain_error("directional_derivative: direction exceeds omega truncation");
  }
  OmegaSample shifted = omega;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    shifted.theta[i] += step * direction[i];
  }
  return (evaluate(f, shifted) - evaluate(f, omega)) / step;
}

namespace {

double binomial_small(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

double factorial_small(std::uint32_t k) {
  double result = 1.0;
  for (std::uint32_t i = 2; i <= k; ++i) result *= static_cast<double>(i);
  return result;
}

// Expansion of H_alpha * H_beta in the Hermite basis: position by position,
// h_m h_n = sum_k C(m,k) C(n,k) k! h_{m+n-2k}.
void expand_pair(const MultiIndex& alpha, const MultiIndex& beta, double weight,
                 std::map<MultiIndex, double>& out) {
  const std::size_t width = std::max(alpha.max_position(), beta.max_position());
  std::vector<std::pair<std::vector<std::uint32_t>, double>> partial;
  partial.emplace_back(std::vector<std::uint32_t>(width, 0), weight);
  for (std::size_t pos = 1; pos <= width; ++pos) {
    const std::uint32_t m = alpha.entry(pos);
    const std::uint32_t n = beta.entry(pos);
    if (m == 0 && n == 0) continue;
    std::vector<std::pair<std::vector<std::uint32_t>, double>> next;
    next.reserve(partial.size() * (std::min(m, n) + 1));
    for (const auto& [gamma, w] : partial) {
      for (std::uint32_t k = 0; k <= std::min(m, n); ++k) {
        const double link = binomial_small(m, k) * binomial_small(n, k) * factorial_small(k);
        auto extended = gamma;
        extended[pos - 1] = m + n - 2 * k;
        next.emplace_back(std::move(extended), w * link);
      }
    }
    partial = std::move(next);
  }
  for (auto& [gamma, w] : partial) {
    out[MultiIndex(std::move(gamma))] += w;
  }
}

}  // namespace

ChaosExpansion ordinary_product(const ChaosExpansion& f, const ChaosExpansion& g) {
  if (f.dimension() != g.dimension()) {
    throw std::domain_error("ordinary_product: parameter dimension mismatch");
  }
  std::map<MultiIndex, double> acc;
  for (const auto& [alpha, a] : f.terms()) {
    for (const auto& [beta, b] : g.terms()) {
      expand_pair(alpha, beta, a * b, acc);
    }
  }
  ChaosExpansion out(f.dimension());
  for (const auto& [gamma, c] : acc) {
    if (c != 0.0) out.set_coefficient(gamma, c);
  }
  return out;
}

ChaosExpansion polynomial_apply(std::span<const double> coeffs, const ChaosExpansion& f) {
  ChaosExpansion result(f.dimension());
  ChaosExpansion power = ChaosExpansion::constant(f.dimension(), 1.0);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (m > 0) power = ordinary_product(power, f);
    if (coeffs[m] != 0.0) result += coeffs[m] * power;
  }
  return result;
}

ChainRuleReport chain_rule_check(const ChaosExpansion& f, std::span<const double> phi,
                                 std::uint64_t seed, std::size_t probes) {
  if (phi.size() > 5) {
    throw std::domain_error("chain_rule_check: polynomial degree must be <= 4");
  }
  if (f.max_degree() > 3) {
    throw std::domain_error("chain_rule_check: chaos degree must be <= 3");
  }

  const std::size_t d = f.dimension();
  const ChaosExpansion composed = polynomial_apply(phi, f);
  const MalliavinDerivative d_composed = hm_derivative(composed);
  const MalliavinDerivative d_f = hm_derivative(f);

  std::vector<double> dphi(phi.size() > 1 ? phi.size() - 1 : 0);
  for (std::size_t m = 1; m < phi.size(); ++m) {
    dphi[m - 1] = static_cast<double>(m) * phi[m];
  }
  const ChaosExpansion dphi_of_f =
      dphi.empty() ? ChaosExpansion(d) : polynomial_apply(dphi, f);

  const std::size_t coords = std::max<std::size_t>(f.max_basis(), 1);
  ChainRuleReport report;
  report.probes = probes;
  for (std::size_t p = 0; p < probes; ++p) {
    const OmegaSample omega = sample_omega(seed, p, coords);
    std::vector<double> x(d);
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = -2.0 + 4.0 * uniform_draw(seed ^ 0x9e3779b9ULL, p, k);
    }
    const double lhs = d_composed.value_at(x, omega);
    const double rhs = evaluate(dphi_of_f, omega) * d_f.value_at(x, omega);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    report.max_relative_gap = std::max(report.max_relative_gap, std::abs(lhs - rhs) / scale);
  }
  return report;
}

std::vector<ClarkOconeRow> clark_ocone_reconstruct(ClarkOconeCase which,
                                                   std::span<const std::size_t> steps_list,
                                                   std::size_t paths, std::uint64_t seed,
                                                   double extent) {
  std::vector<ClarkOconeRow> rows;
  rows.reserve(steps_list.size());
  for (const std::size_t steps : steps_list) {
    if (steps == 0) throw std::domain_error("clark_ocone_reconstruct: steps must be >= 1");
    struct ErrSums {
      double sq = 0.0;
      double abs = 0.0;
      ErrSums merge(const ErrSums& o) const { return {sq + o.sq, abs + o.abs}; }
    };
    const auto sums = chunked_reduce<ErrSums>(
        paths, 1024,
        [&](std::uint64_t begin, std::uint64_t end) {
          ErrSums local;
          for (std::uint64_t p = begin; p < end; ++p) {
            const BrownianPath1D path = sample_path_1d(seed, p, steps, extent);
            const auto nodes = path.nodes();
            const double terminal = nodes.back();
            double target = 0.0;
            double reconstructed = 0.0;
            switch (which) {
              case ClarkOconeCase::kBrownianTerminal: {
                target = terminal;
                double integral = 0.0;
                for (double db : path.increments) integral += db;
                reconstructed = 0.0 + integral;
                break;
              }
              case ClarkOconeCase::kBrownianTerminalSquared: {
                target = terminal * terminal;
                double integral = 0.0;
                for (std::size_t i = 0; i < steps; ++i) {
                  integral += 2.0 * nodes[i] * path.increments[i];
                }
                reconstructed = extent + integral;
                break;
              }
              case ClarkOconeCase::kWickExponential: {
                const double dt = path.dt();
                target = std::exp(terminal - 0.5 * extent);
                double integral = 0.0;
                for (std::size_t i = 0; i < steps; ++i) {
                  const double t_i = dt * static_cast<double>(i);
                  integral += std::exp(nodes[i] - 0.5 * t_i) * path.increments[i];
                }
                reconstructed = 1.0 + integral;
                break;
              }
            }
            const double err = reconstructed - target;
            local.sq += err * err;
            local.abs += std::abs(err);
          }
          return local;
        },
        ErrSums{}, [](ErrSums acc, ErrSums part) { return acc.merge(part); });

    ClarkOconeRow row;
    row.steps = steps;
    row.paths = paths;
    row.rms_error = paths ? std::sqrt(sums.sq / static_cast<double>(paths)) : 0.0;
    row.mean_abs_error = paths ? sums.abs / static_cast<double>(paths) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wnoise
