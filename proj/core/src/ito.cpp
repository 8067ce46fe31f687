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

#include "wnoise/ito.hpp"

#include <cmath>
#include <stdexcept>

#include "wnoise/chaos.hpp"

namespace wnoise {

AdaptedProcess1D AdaptedProcess1D::deterministic(
    std::size_t steps, double extent, const std::function<double(double)>& f) {
  std::vector<double> values(steps);
  const double dt = steps ? extent / static_cast<double>(steps) : 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = f(dt * static_cast<double>(i));
  }
  return AdaptedProcess1D(std::move(values));
}

AdaptedProcess1D AdaptedProcess1D::from_sweep(
    const BrownianPath1D& path,
    const std::function<double(std::size_t, std::span<const double>)>& f) {
  const std::size_t n = path.steps();
  std::vector<double> values(n);
  const std::span<const double> all(path.increments);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = f(i, all.first(i));
  }
  return AdaptedProcess1D(std::move(values));
}

double ito_1d(const AdaptedProcess1D& y, const BrownianPath1D& path) {
  if (y.steps() != path.steps()) {
    throw std::domain_error("ito_1d: integrand and path step counts differ");
  }
  double sum = 0.0;
  const auto values = y.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += values[i] * path.increments[i];
  }
  return sum;
}

double AdaptedProcess2D::Past::increment(std::size_t a, std::size_t b) const {
  if (a >= i_ || b >= j_) {
    throw std::domain_error("adapted sweep: increment (" + std::to_string(a) + "," +
                            std::to_string(b) + ") is not in the strict past of (" +
                            std::to_string(i_) + "," + std::to_string(j_) + ")");
  }
  return grid_.at(a, b);
}

double AdaptedProcess2D::Past::sheet(std::size_t a, std::size_t b) const {
  if (a > i_ || b > j_) {
    throw std::domain_error("adapted sweep: sheet node outside the past rectangle");
  }
  return corners_[a * (grid_.nx + 1) + b];
}

AdaptedProcess2D AdaptedProcess2D::deterministic(
    const NoiseGrid2D& grid, const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.nt * grid.nx);
  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      values[i * grid.nx + j] =
          f(grid.dt * static_cast<double>(i), grid.dx * static_cast<double>(j));
    }
  }
  return AdaptedProcess2D(std::move(values), grid.nt, grid.nx);
}

AdaptedProcess2D AdaptedProcess2D::deterministic_midpoint(
    const NoiseGrid2D& grid, const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.nt * grid.nx);
  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      values[i * grid.nx + j] = f(grid.dt * (static_cast<double>(i) + 0.5),
                                  grid.dx * (static_cast<double>(j) + 0.5));
    }
  }
  return AdaptedProcess2D(std::move(values), grid.nt, grid.nx);
}

AdaptedProcess2D AdaptedProcess2D::from_sweep(
    const NoiseGrid2D& grid, const std::function<double(const Past&)>& f) {
  // Corner prefix table: corners[(i,j)] = sum of increments i'<i, j'<j.
  const std::size_t rows = grid.nt + 1;
  const std::size_t cols = grid.nx + 1;
  std::vector<double> corners(rows * cols, 0.0);
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      corners[i * cols + j] = corners[(i - 1) * cols + j] + corners[i * cols + (j - 1)] -
                              corners[(i - 1) * cols + (j - 1)] + grid.at(i - 1, j - 1);
    }
  }
  std::vector<double> values(grid.nt * grid.nx);
  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      values[i * grid.nx + j] = f(Past(grid, corners, i, j));
    }
  }
  return AdaptedProcess2D(std::move(values), grid.nt, grid.nx);
}

double ito_2d(const AdaptedProcess2D& y, const NoiseGrid2D& grid) {
  if (y.nt() != grid.nt || y.nx() != grid.nx) {
    throw std::domain_error("ito_2d: integrand and grid shapes differ");
  }
  double sum = 0.0;
  const auto& values = y.values();
  for (std::size_t c = 0; c < values.size(); ++c) {
    sum += values[c] * grid.db[c];
  }
  return sum;
}

WickItoReport wick_ito_demo(double extent, std::size_t steps, std::uint64_t seed) {
  WickItoReport report;
  report.extent = extent;
  report.steps = steps;
  if (extent == 0.0 || steps == 0) return report;

  const BrownianPath1D path = sample_path_1d(seed, 0, steps, extent);
  const auto nodes = path.nodes();
  double integral = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    integral += nodes[i] * path.increments[i];
  }
  const double terminal = nodes.back();
  report.terminal = terminal;
  report.ito_integral = integral;
  report.ito_formula = 0.5 * terminal * terminal - 0.5 * extent;

  // Chaos route: theta_1 := B(T)/sqrt(T) standardizes the terminal value, so
  // B(T) is the first-chaos element sqrt(T) H_{eps(1)} and its square Wick
  // power evaluates to T h_2(theta_1) = B(T)^2 - T.
  const double root_extent = std::sqrt(extent);
  const ChaosExpansion b_terminal =
      ChaosExpansion::basis_term(1, MultiIndex::unit(1), root_extent);
  const ChaosExpansion square = wick_power(b_terminal, 2);
  OmegaSample omega;
  omega.seed = path.seed;
  omega.stream = path.stream;
  omega.theta = {terminal / root_extent};
  report.wick_square = 0.5 * evaluate(square, omega);

  report.gap_integral_formula = report.ito_integral - report.ito_formula;
  report.gap_formula_wick = report.ito_formula - report.wick_square;
  return report;
}

}  // namespace wnoise
