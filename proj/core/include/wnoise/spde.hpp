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

#ifndef WNOISE_SPDE_HPP
#define WNOISE_SPDE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wnoise/chaos.hpp"
#include "wnoise/gaussian_field.hpp"

namespace wnoise {

/// Raised by the problem-config parser; the message names the bad line.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient field (t, x) -> double from the small named family the
/// text config accepts.
struct CoefficientField {
  enum class Kind { kConstant, kLinearT, kLinearX, kProduct };

  Kind kind = Kind::kConstant;
  double scale = 0.0;

  double operator()(double t, double x) const;

  /// Parses "const:c", "linear_t:c", "linear_x:c" or "product:c".
  /// Throws std::invalid_argument on anything else.
  static CoefficientField parse(std::string_view text);
  std::string to_string() const;
};

/// The population model on [0, T] x [0, X]: mixed-derivative growth with
/// rate field alpha, noise coefficient field sigma, constant initial value
/// y0 on both axes, solved on an nt-by-nx grid with series order N.
struct SpdeProblem {
  CoefficientField alpha;
  CoefficientField sigma;
  double y0 = 1.0;
  double extent_t = 1.0;
  double extent_x = 1.0;
  std::size_t nt = 64;
  std::size_t nx = 64;
  unsigned order = 12;

  double dt() const { return extent_t / static_cast<double>(nt); }
  double dx() const { return extent_x / static_cast<double>(nx); }
};

/// L2 norm of sigma over [0, t] x [0, x]: the square root of the midpoint
/// sum of sigma^2 dt dx over the cells below-left of the node nearest (t, x).
double sigma_norm(const SpdeProblem& problem, double t, double x);

/// One evaluation of the explicit series solution at a grid node.
struct SeriesSolution {
  double quad_alpha = 0.0;   // A = int int alpha over the rectangle
  double sigma_norm = 0.0;   // ||sigma|| over the rectangle
  double gaussian = 0.0;     // G = int int sigma dB / ||sigma|| (0 when ||sigma|| = 0)
  double value = 0.0;
  double last_term = 0.0;    // magnitude of the order-N increment
};

/// Evaluates y0 sum_n (1/n!) sum_k ||s||^k / (k!(n-k)!) A^{n-k} h_k(G) at a
/// grid node, using the same midpoint coefficients and the same increments
/// as the discrete oracle. When ||sigma|| = 0, the k >= 1 terms are dropped
/// and G is unused; the branch is total.
SeriesSolution series_solution(const SpdeProblem& problem, const NoiseGrid2D& grid,
                               double t, double x);

/// E[Y(t, x)] = y0 sum_n A^n / (n!)^2: the term-by-term expectation of the
/// series (E h_k(G) = 0 for k >= 1, so no sigma dependence remains).
double mean_solution(const SpdeProblem& problem, double t, double x);

/// Forward sweep of the discrete 2-parameter Volterra equation
///   Y_ij = y0 + sum_{i'<i, j'<j} (alpha Y dt dx + sigma Y dB)
/// over one noise grid. Returns node values, row-major (nt+1) x (nx+1).
/// Adapted by construction: each node uses only its strict lower-left past.
std::vector<double> picard_oracle(const SpdeProblem& problem, const NoiseGrid2D& grid);

struct SpdeComparisonRow {
  std::size_t nt = 0;
  std::size_t nx = 0;
  std::size_t paths = 0;
  double rms_gap = 0.0;       // pathwise RMS of series - oracle at the corner
  double mean_gap = 0.0;
  double mean_series = 0.0;
  double mean_oracle = 0.0;
  double se_oracle = 0.0;     // standard error of the oracle mean
};

/// Runs series and oracle on the same increments at each grid size and
/// reports the pathwise gap statistics at the corner (T, X).
std::vector<SpdeComparisonRow> compare_series_vs_oracle(
    const SpdeProblem& problem, std::span<const std::size_t> grid_sizes,
    std::size_t paths, std::uint64_t seed);

struct WickSkorohodOptions {
  std::size_t expansion_basis = 12;  // d=2 basis functions kept for sigma
  unsigned max_wick_order = 6;       // chaos degree cap of the series
};

struct WickSkorohodResult {
  double value = 0.0;                // Y(t,x)(omega)
  double expectation = 0.0;          // E[y0] * sum_n A^n/(n!)^2
  double projected_sigma_norm = 0.0; // ||P_J (sigma 1_rect)||, the norm the series sees
  double grid_sigma_norm = 0.0;      // midpoint-grid ||sigma||, its target
};

/// The Wick-Skorohod variant: the driving noise is a coordinate sample, the
/// series is materialized in chaos form over the d=2 basis (Wick powers of
/// the projected first-chaos element), Wick-multiplied by a possibly random
/// initial value y0, and evaluated at omega. No adaptedness is required of
/// y0. The projected-vs-grid sigma norms expose the basis truncation error.
WickSkorohodResult wick_skorohod_solution(const SpdeProblem& problem,
                                          const ChaosExpansion& y0,
                                          const OmegaSample& omega, double t, double x,
                                          const WickSkorohodOptions& options = {});

/// A batch run description as read from the text config format.
struct SpdeRunConfig {
  SpdeProblem problem;
  std::size_t paths = 1000;
  std::uint64_t seed = 1;

  /// Canonical `key = value` listing, echoed into output metadata.
  std::string to_string() const;
};

/// Parses `key = value` lines (keys: alpha, sigma, y0, T, X, nt, nx, N,
/// paths, seed; '#' comments and blank lines allowed). Every key is optional
/// and defaulted. Throws config_error naming the offending line.
SpdeRunConfig parse_spde_config(std::istream& in);

struct SpdeExperimentRow {
  double t = 0.0;
  double x = 0.0;
  double mean_series = 0.0;
  double mean_oracle = 0.0;
  double se_oracle = 0.0;
  double rms_path_gap = 0.0;
};

/// Monte Carlo comparison of series and oracle at the four probe nodes
/// nearest (T/2, X/2), (T/2, X), (T, X/2), (T, X).
std::vector<SpdeExperimentRow> run_spde_experiment(const SpdeRunConfig& config);

}  // namespace wnoise

#endif  // WNOISE_SPDE_HPP
