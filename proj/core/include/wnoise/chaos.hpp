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

#ifndef WNOISE_CHAOS_HPP
#define WNOISE_CHAOS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "wnoise/gaussian_field.hpp"
#include "wnoise/multi_index.hpp"

namespace wnoise {

/// A sparse Hermite chaos expansion sum_alpha c_alpha H_alpha over the
/// d-parameter basis, where H_alpha(omega) = prod_i h_{alpha_i}(theta_i).
///
/// Stored coefficients are never exactly zero; cancellation prunes terms at
/// 0.0 exactly (no epsilon), so algebra laws hold exactly on dyadic-rational
/// inputs. Terms iterate in the canonical (degree, lexicographic) order.
class ChaosExpansion {
 public:
  /// The zero element over a d-parameter basis.
  explicit ChaosExpansion(std::size_t dimension);

  static ChaosExpansion constant(std::size_t dimension, double value);
  /// c * H_alpha.
  static ChaosExpansion basis_term(std::size_t dimension, const MultiIndex& alpha,
                                   double coefficient = 1.0);
  /// First-chaos element sum_j a_j H_{eps(j)} = <omega, sum a_j eta_j>.
  static ChaosExpansion first_chaos(std::size_t dimension, std::span<const double> a);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::map<MultiIndex, double>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of H_alpha; zero when absent.
  double coefficient(const MultiIndex& alpha) const noexcept;
  /// Sets (or, with value 0, erases) the coefficient of H_alpha.
  void set_coefficient(const MultiIndex& alpha, double value);

  /// Largest |alpha| over stored terms; 0 for the zero element.
  std::uint64_t max_degree() const noexcept;
  /// Largest basis position carrying a nonzero entry; 0 if none.
  std::size_t max_basis() const noexcept;

  ChaosExpansion& operator+=(const ChaosExpansion& other);
  ChaosExpansion& operator-=(const ChaosExpansion& other);
  ChaosExpansion& operator*=(double scalar);

  friend ChaosExpansion operator+(ChaosExpansion a, const ChaosExpansion& b) {
    a += b;
    return a;
  }
  friend ChaosExpansion operator-(ChaosExpansion a, const ChaosExpansion& b) {
    a -= b;
    return a;
  }
  friend ChaosExpansion operator*(double s, ChaosExpansion f) {
    f *= s;
    return f;
  }
  friend bool operator==(const ChaosExpansion& a, const ChaosExpansion& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dimension_;
  std::map<MultiIndex, double> terms_;
};

/// L2(P) norm squared: sum alpha! c_alpha^2 (the chaos isometry).
/// Throws std::overflow_error when a term factorial exceeds 64-bit range.
double l2_norm_sq(const ChaosExpansion& f);

/// Hida distribution norm squared ||f||_{-q}^2 = sum alpha! c^2 (2N)^{-q alpha}.
double hida_norm_sq(const ChaosExpansion& f, double q);

/// Test-function norm squared ||f||_k^2 = sum c^2 (alpha!)^2 (2N)^{k alpha}.
double test_norm_sq(const ChaosExpansion& f, unsigned k);

/// Wick product: coefficient convolution (F <> G)_gamma = sum_{a+b=gamma}
/// F_a G_b. Commutative, associative, distributive; never truncates.
/// Throws std::domain_error on dimension mismatch.
ChaosExpansion wick_product(const ChaosExpansion& f, const ChaosExpansion& g);

/// n-th Wick power by binary exponentiation; F^{<>0} = 1.
ChaosExpansion wick_power(const ChaosExpansion& f, unsigned n);

struct WickExp {
  ChaosExpansion series;
  /// Hida norm (q = 2) of the final F^{<>N}/N! term, as a truncation gauge.
  double last_term_hida_norm = 0.0;
};

/// Truncated Wick exponential sum_{n<=order} F^{<>n}/n!. F must have zero
/// constant term (factor exp(c) out first); otherwise std::domain_error.
WickExp wick_exp(const ChaosExpansion& f, unsigned order);

/// Copy of f keeping only terms with |alpha| <= max_degree and support
/// within basis positions 1..max_basis.
ChaosExpansion truncate(const ChaosExpansion& f, std::uint64_t max_degree,
                        std::size_t max_basis);

/// Pointwise value sum_alpha c_alpha prod_i h_{alpha_i}(theta_i).
/// Requires omega.truncation() >= max_basis(f); otherwise std::domain_error.
double evaluate(const ChaosExpansion& f, const OmegaSample& omega);

/// E[f]: the coefficient of the empty multi-index.
double expectation(const ChaosExpansion& f);

/// Line-based text form: header `d=<int>`, then per term
/// `alpha=<comma-separated entries> c=<decimal>` in canonical term order.
/// Decimals carry 17 significant digits, so round trips are exact.
std::string to_text(const ChaosExpansion& f);

/// Inverse of to_text. Throws std::runtime_error naming the offending line.
ChaosExpansion chaos_from_text(std::string_view text);

}  // namespace wnoise

#endif  // WNOISE_CHAOS_HPP
