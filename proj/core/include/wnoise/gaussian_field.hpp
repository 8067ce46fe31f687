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

#ifndef WNOISE_GAUSSIAN_FIELD_HPP
#define WNOISE_GAUSSIAN_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace wnoise {

/// One sampled point omega of the white-noise space, represented by its
/// first J Gaussian coordinates theta_i = <omega, eta_i>. Regenerating with
/// the same (seed, stream) reproduces theta bit-exactly.
struct OmegaSample {
  std::vector<double> theta;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  std::size_t truncation() const noexcept { return theta.size(); }
};

/// J i.i.d. standard normal coordinates from the counter-based generator.
OmegaSample sample_omega(std::uint64_t seed, std::uint64_t stream, std::size_t count);

/// <omega, phi> = sum_j a_j theta_j for phi = sum_j a_j eta_j.
/// Throws std::domain_error when more coefficients than coordinates are given.
double wiener_integral(std::span<const double> coefficients, const OmegaSample& omega);

/// Expansion coefficients of the indicator of [0, corner]: entry j-1 holds
/// int_0^corner eta_j(u) du for j = 1..count. Reusable across samples.
std::vector<double> sheet_coefficients(std::size_t d, std::span<const double> corner,
                                       std::size_t count);

/// Brownian sheet value B(corner, omega) through the truncated expansion
/// sum_j (int_0^corner eta_j) theta_j; the parameter dimension is
/// corner.size() and the truncation is omega.truncation().
double sheet_by_expansion(std::span<const double> corner, const OmegaSample& omega);

/// A discretized 2-parameter noise: nt-by-nx independent increments with
/// Var(db_ij) = dt*dx.
struct NoiseGrid2D {
  std::size_t nt = 0;
  std::size_t nx = 0;
  double dt = 0.0;
  double dx = 0.0;
  std::vector<double> db;  // row-major, nt*nx entries
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  double at(std::size_t i, std::size_t j) const { return db[i * nx + j]; }
};

NoiseGrid2D sample_noise_grid(std::uint64_t seed, std::uint64_t stream,
                              std::size_t nt, std::size_t nx, double extent_t,
                              double extent_x);

/// Sheet value at node (i, j): the sum of all increments strictly below and
/// left, i.e. over cells i' < i, j' < j. Throws std::domain_error when the
/// node lies outside the grid.
double sheet_from_grid(const NoiseGrid2D& grid, std::size_t i, std::size_t j);

/// Discrete pairing <W, phi> = sum phi(cell) * db(cell) with phi sampled at
/// cell centers, row-major. Throws std::domain_error on a shape mismatch.
double white_noise_pairing(std::span<const double> phi_cells, const NoiseGrid2D& grid);

/// Grid increments induced by a coordinate sample: db_ij is the rectangle
/// increment of the truncated expansion sheet sum_j theta_j int eta_j over
/// cell (i, j). Couples the two noise representations for cross-checks.
NoiseGrid2D grid_from_expansion(const OmegaSample& omega, std::size_t nt,
                                std::size_t nx, double extent_t, double extent_x);

/// CSV export: header `nt,nx,dt,dx,seed,stream`, one line of metadata values,
/// then nt lines of nx comma-separated increments at 17 significant digits.
void write_grid_csv(const NoiseGrid2D& grid, std::ostream& out);

/// A 1-parameter Brownian path on a uniform partition of [0, T]:
/// `increments[i]` is B(t_{i+1}) - B(t_i) with variance T/steps.
struct BrownianPath1D {
  double extent = 0.0;
  std::vector<double> increments;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  std::size_t steps() const noexcept { return increments.size(); }
  double dt() const noexcept {
    return increments.empty() ? 0.0 : extent / static_cast<double>(increments.size());
  }
  /// Node values B(t_0)..B(t_n) by cumulative summation (B(0) = 0).
  std::vector<double> nodes() const;
};

BrownianPath1D sample_path_1d(std::uint64_t seed, std::uint64_t stream,
                              std::size_t steps, double extent);

}  // namespace wnoise

#endif  // WNOISE_GAUSSIAN_FIELD_HPP
