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

#ifndef WNOISE_ITO_HPP
#define WNOISE_ITO_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wnoise/gaussian_field.hpp"

namespace wnoise {

/// A grid process adapted to a 1-parameter path: value i is attached to the
/// left endpoint t_i and may depend only on increments 0..i-1. Adaptedness
/// is enforced structurally: the sweep callback is handed exactly the strict
/// past of the step it is producing.
class AdaptedProcess1D {
 public:
  /// Deterministic integrand sampled at left endpoints t_i = i * T / steps.
  static AdaptedProcess1D deterministic(std::size_t steps, double extent,
                                        const std::function<double(double)>& f);

  /// Forward sweep over a path: f(i, past) sees increments[0..i).
  static AdaptedProcess1D from_sweep(
      const BrownianPath1D& path,
      const std::function<double(std::size_t, std::span<const double>)>& f);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t steps() const noexcept { return values_.size(); }

 private:
  explicit AdaptedProcess1D(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

/// Left-endpoint Ito sum: sum_i Y_i (B(t_{i+1}) - B(t_i)).
/// Throws std::domain_error on a shape mismatch.
double ito_1d(const AdaptedProcess1D& y, const BrownianPath1D& path);

/// A grid process adapted in the 2-parameter partial order: the value at
/// cell (i, j) may depend only on increments (i', j') with i' < i and j' < j.
class AdaptedProcess2D {
 public:
  /// The strict lower-left past visible to a sweep callback at cell (i, j).
  class Past {
   public:
    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    /// Increment at (a, b); requires a < i and b < j.
    double increment(std::size_t a, std::size_t b) const;
    /// Sheet value at node (a, b), a <= i and b <= j; uses only increments
    /// strictly below-left of (i, j).
    double sheet(std::size_t a, std::size_t b) const;

   private:
    friend class AdaptedProcess2D;
    Past(const NoiseGrid2D& grid, const std::vector<double>& corners,
         std::size_t i, std::size_t j)
        : grid_(grid), corners_(corners), i_(i), j_(j) {}
    const NoiseGrid2D& grid_;
    const std::vector<double>& corners_;  // (nt+1) x (nx+1) prefix sums
    std::size_t i_, j_;
  };

  /// Deterministic integrand sampled at cell lower-left nodes (i dt, j dx).
  static AdaptedProcess2D deterministic(const NoiseGrid2D& grid,
                                        const std::function<double(double, double)>& f);

  /// Deterministic integrand sampled at cell midpoints; matches the midpoint
  /// quadrature convention used by the SPDE solvers.
  static AdaptedProcess2D deterministic_midpoint(
      const NoiseGrid2D& grid, const std::function<double(double, double)>& f);

  /// Forward sweep in row-major order; f may query only the strict past.
  static AdaptedProcess2D from_sweep(const NoiseGrid2D& grid,
                                     const std::function<double(const Past&)>& f);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t nt() const noexcept { return nt_; }
  std::size_t nx() const noexcept { return nx_; }

 private:
  AdaptedProcess2D(std::vector<double> values, std::size_t nt, std::size_t nx)
      : values_(std::move(values)), nt_(nt), nx_(nx) {}
  std::vector<double> values_;
  std::size_t nt_ = 0, nx_ = 0;
};

/// Two-parameter left-corner Ito sum: sum_ij Y_ij db_ij.
/// Throws std::domain_error on a shape mismatch.
double ito_2d(const AdaptedProcess2D& y, const NoiseGrid2D& grid);

/// One seeded path of the d=1 identity chain: the discrete integral of B
/// against dB, the closed form B(T)^2/2 - T/2, and the same value produced
/// through Wick algebra (half the square Wick power of the terminal
/// first-chaos element, evaluated at the path's standardized coordinate).
struct WickItoReport {
  double extent = 0.0;
  std::size_t steps = 0;
  double terminal = 0.0;        // B(T)
  double ito_integral = 0.0;    // sum B(t_i) dB_i
  double ito_formula = 0.0;     // B(T)^2/2 - T/2
  double wick_square = 0.0;     // evaluate(B_T^{<>2})/2 via chaos algebra
  double gap_integral_formula = 0.0;
  double gap_formula_wick = 0.0;
};

WickItoReport wick_ito_demo(double extent, std::size_t steps, std::uint64_t seed);

}  // namespace wnoise

#endif  // WNOISE_ITO_HPP
