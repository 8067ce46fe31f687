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

#include "wnoise/gaussian_field.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "wnoise/format.hpp"
#include "wnoise/hermite.hpp"
#include "wnoise/multi_index.hpp"
#include "wnoise/rng.hpp"

namespace wnoise {

OmegaSample sample_omega(std::uint64_t seed, std::uint64_t stream, std::size_t count) {
  if (count == 0) throw std::domain_error("sample_omega: truncation must be >= 1");
  OmegaSample omega;
  omega.seed = seed;
  omega.stream = stream;
  omega.theta.resize(count);
  NormalStream normals(seed, stream);
  for (std::size_t i = 0; i < count; ++i) omega.theta[i] = normals.next();
  return omega;
}

double wiener_integral(std::span<const double> coefficients, const OmegaSample& omega) {
  if (coefficients.size() > omega.theta.size()) {
    throw std::domain_error("wiener_integral: more coefficients than omega coordinates");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    sum += coefficients[j] * omega.theta[j];
  }
  return sum;
}

std::vector<double> sheet_coefficients(std::size_t d, std::span<const double> corner,
                                       std::size_t count) {
  if (corner.size() != d) throw std::domain_error("sheet_coefficients: corner dimension mismatch");
  for (double c : corner) {
    if (c < 0.0) throw std::domain_error("sheet_coefficients: corner must be nonnegative");
  }
  const auto deltas = basis_table(d, count);
  std::uint32_t max_order = 1;
  for (const auto& delta : deltas) {
    for (std::uint32_t component : delta) max_order = std::max(max_order, component);
  }
  // Per-axis 1-D integral tables; the tensor integral is their product.
  std::vector<std::vector<double>> axis(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (corner[k] == 0.0) return std::vector<double>(count, 0.0);
    axis[k] = xi_integrals_upto(max_order, corner[k]);
  }
  std::vector<double> coeffs(count);
  for (std::size_t j = 0; j < count; ++j) {
    double prod = 1.0;
    for (std::size_t k = 0; k < d; ++k) prod *= axis[k][deltas[j][k] - 1];
    coeffs[j] = prod;
  }
  return coeffs;
}

double sheet_by_expansion(std::span<const double> corner, const OmegaSample& omega) {
  const auto coeffs = sheet_coefficients(corner.size(), corner, omega.truncation());
  return wiener_integral(coeffs, omega);
}

NoiseGrid2D sample_noise_grid(std::uint64_t seed, std::uint64_t stream,
                              std::size_t nt, std::size_t nx, double extent_t,
                              double extent_x) {
  if (nt == 0 || nx == 0) throw std::domain_error("sample_noise_grid: cell counts must be >= 1");
  if (extent_t < 0.0 || extent_x < 0.0) {
    throw std::domain_error("sample_noise_grid: extents must be nonnegative");
  }
  NoiseGrid2D grid;
  grid.nt = nt;
  grid.nx = nx;
  grid.dt = extent_t / static_cast<double>(nt);
  grid.dx = extent_x / static_cast<double>(nx);
  grid.seed = seed;
  grid.stream = stream;
  grid.db.resize(nt * nx);
  const double scale = std::sqrt(grid.dt * grid.dx);
  NormalStream normals(seed, stream);
  for (double& cell : grid.db) cell = scale * normals.next();
  return grid;
}

double sheet_from_grid(const NoiseGrid2D& grid, std::size_t i, std::size_t j) {
  if (i > grid.nt || j > grid.nx) throw std::domain_error("sheet_from_grid: node outside grid");
  double sum = 0.0;
  for (std::size_t a = 0; a < i; ++a) {
    const double* row = grid.db.data() + a * grid.nx;
    for (std::size_t b = 0; b < j; ++b) sum += row[b];
  }
  return sum;
}

double white_noise_pairing(std::span<const double> phi_cells, const NoiseGrid2D& grid) {
  if (phi_cells.size() != grid.db.size()) {
    throw std::domain_error("white_noise_pairing: cell-sample shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < phi_cells.size(); ++c) sum += phi_cells[c] * grid.db[c];
  return sum;
}

NoiseGrid2D grid_from_expansion(const OmegaSample& omega, std::size_t nt,
                                std::size_t nx, double extent_t, double extent_x) {
  if (nt == 0 || nx == 0) throw std::domain_error("grid_from_expansion: cell counts must be >= 1");
  const std::size_t count = omega.truncation();
  const auto deltas = basis_table(2, count);
  std::uint32_t max_order = 1;
  for (const auto& delta : deltas) {
    max_order = std::max({max_order, delta[0], delta[1]});
  }

  NoiseGrid2D grid;
  grid.nt = nt;
  grid.nx = nx;
  grid.dt = extent_t / static_cast<double>(nt);
  grid.dx = extent_x / static_cast<double>(nx);
  grid.seed = omega.seed;
  grid.stream = omega.stream;
  grid.db.assign(nt * nx, 0.0);

  // Axis tables of int_0^{node} xi_order, then cell factors by differencing.
  auto node_table = [max_order](std::size_t cells, double step) {
    std::vector<std::vector<double>> nodes(cells + 1);
    nodes[0].assign(max_order, 0.0);
    for (std::size_t i = 1; i <= cells; ++i) {
      nodes[i] = xi_integrals_upto(max_order, step * static_cast<double>(i));
    }
    return nodes;
  };
  const auto t_nodes = node_table(nt, grid.dt);
  const auto x_nodes = node_table(nx, grid.dx);

  for (std::size_t jj = 0; jj < count; ++jj) {
    const std::uint32_t ot = deltas[jj][0];
    const std::uint32_t ox = deltas[jj][1];
    const double theta = omega.theta[jj];
    for (std::size_t i = 0; i < nt; ++i) {
      const double ft = t_nodes[i + 1][ot - 1] - t_nodes[i][ot - 1];
      double* row = grid.db.data() + i * nx;
      for (std::size_t j = 0; j < nx; ++j) {
        const double fx = x_nodes[j + 1][ox - 1] - x_nodes[j][ox - 1];
        row[j] += theta * ft * fx;
      }
    }
  }
  return grid;
}

void write_grid_csv(const NoiseGrid2D& grid, std::ostream& out) {
  out << "nt,nx,dt,dx,seed,stream\n";
  out << grid.nt << ',' << grid.nx << ',' << format_g17(grid.dt) << ','
      << format_g17(grid.dx) << ',' << grid.seed << ',' << grid.stream << '\n';
  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      if (j > 0) out << ',';
      out << format_g17(grid.at(i, j));
    }
    out << '\n';
  }
}

std::vector<double> BrownianPath1D::nodes() const {
  std::vector<double> values(increments.size() + 1);
  values[0] = 0.0;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    values[i + 1] = values[i] + increments[i];
  }
  return values;
}

BrownianPath1D sample_path_1d(std::uint64_t seed, std::uint64_t stream,
                              std::size_t steps, double extent) {
  if (steps == 0) throw std::domain_error("sample_path_1d: steps must be >= 1");
  if (extent < 0.0) throw std::domain_error("sample_path_1d: extent must be nonnegative");
  BrownianPath1D path;
  path.extent = extent;
  path.seed = seed;
  path.stream = stream;
  path.increments.resize(steps);
  const double scale = std::sqrt(extent / static_cast<double>(steps));
  NormalStream normals(seed, stream);
  for (double& d : path.increments) d = scale * normals.next();
  return path;
}

}  // namespace wnoise
