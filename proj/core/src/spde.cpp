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

#include "wnoise/spde.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <stdexcept>

#include "wnoise/format.hpp"
#include "wnoise/hermite.hpp"
#include "wnoise/multi_index.hpp"
#include "wnoise/parallel.hpp"

namespace wnoise {

double CoefficientField::operator()(double t, double x) const {
  switch (kind) {
    case Kind::kConstant: return scale;
    case Kind::kLinearT: return scale * t;
    case Kind::kLinearX: return scale * x;
    case Kind::kProduct: return scale * t * x;
  }
  return 0.0;
}

CoefficientField CoefficientField::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("coefficient field: expected <name>:<value>");
  }
  const std::string_view name = text.substr(0, colon);
  CoefficientField field;
  if (name == "const") {
    field.kind = Kind::kConstant;
  } else if (name == "linear_t") {
    field.kind = Kind::kLinearT;
  } else if (name == "linear_x") {
    field.kind = Kind::kLinearX;
  } else if (name == "product") {
    field.kind = Kind::kProduct;
  } else {
    throw std::invalid_argument("coefficient field: unknown family '" + std::string(name) + "'");
  }
  const std::string value(text.substr(colon + 1));
  char* end = nullptr;
  field.scale = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw std::invalid_argument("coefficient field: malformed value '" + value + "'");
  }
  return field;
}

std::string CoefficientField::to_string() const {
  const char* name = "const";
  switch (kind) {
    case Kind::kConstant: name = "const"; break;
    case Kind::kLinearT: name = "linear_t"; break;
    case Kind::kLinearX: name = "linear_x"; break;
    case Kind::kProduct: name = "product"; break;
  }
  return std::string(name) + ":" + format_g17(scale);
}

namespace {

// Cell-midpoint samples of the coefficient fields plus their prefix
// quadratures; shared by the series, the oracle and the experiments so both
// sides see identical discrete coefficients.
struct DiscreteCoefficients {
  std::size_t nt = 0, nx = 0;
  double dt = 0.0, dx = 0.0;
  std::vector<double> alpha_mid;  // nt x nx
  std::vector<double> sigma_mid;  // nt x nx
};

DiscreteCoefficients discretize(const SpdeProblem& problem) {
  DiscreteCoefficients c;
  c.nt = problem.nt;
  c.nx = problem.nx;
  c.dt = problem.dt();
  c.dx = problem.dx();
  c.alpha_mid.resize(c.nt * c.nx);
  c.sigma_mid.resize(c.nt * c.nx);
  for (std::size_t i = 0; i < c.nt; ++i) {
    const double tm = c.dt * (static_cast<double>(i) + 0.5);
    for (std::size_t j = 0; j < c.nx; ++j) {
      const double xm = c.dx * (static_cast<double>(j) + 0.5);
      c.alpha_mid[i * c.nx + j] = problem.alpha(tm, xm);
      c.sigma_mid[i * c.nx + j] = problem.sigma(tm, xm);
    }
  }
  return c;
}

std::size_t node_index(double value, double step, std::size_t count, const char* what) {
  const double ratio = step > 0.0 ? value / step : 0.0;
  const auto index = static_cast<long long>(std::llround(ratio));
  if (index < 0 || static_cast<std::size_t>(index) > count ||
      std::abs(ratio - static_cast<double>(index)) > 1e-9 * std::max(1.0, std::abs(ratio))) {
    throw std::domain_error(std::string(what) + " does not lie on a grid node");
  }
  return static_cast<std::size_t>(index);
}

void require_matching_grid(const SpdeProblem& problem, const NoiseGrid2D& grid) {
  if (grid.nt != problem.nt || grid.nx != problem.nx) {
    throw std::domain_error("noise grid resolution differs from the problem grid");
  }
  if (std::abs(grid.dt - problem.dt()) > 1e-12 * std::max(1.0, problem.dt()) ||
      std::abs(grid.dx - problem.dx()) > 1e-12 * std::max(1.0, problem.dx())) {
    throw std::domain_error("noise grid cell size differs from the problem grid");
  }
}

// Rectangle quadratures A, ||sigma||^2 and the weighted noise sum over cells
// below-left of node (it, ix).
struct RectangleSums {
  double quad_alpha = 0.0;
  double sigma_sq = 0.0;
  double noise = 0.0;
};

RectangleSums rectangle_sums(const DiscreteCoefficients& c, const NoiseGrid2D* grid,
                             std::size_t it, std::size_t ix) {
  RectangleSums sums;
  const double cell = c.dt * c.dx;
  for (std::size_t i = 0; i < it; ++i) {
    const double* arow = c.alpha_mid.data() + i * c.nx;
    const double* srow = c.sigma_mid.data() + i * c.nx;
    const double* brow = grid ? grid->db.data() + i * c.nx : nullptr;
    for (std::size_t j = 0; j < ix; ++j) {
      sums.quad_alpha += arow[j] * cell;
      sums.sigma_sq += srow[j] * srow[j] * cell;
      if (brow) sums.noise += srow[j] * brow[j];
    }
  }
  return sums;
}

// y0 sum_{n<=N} (1/n!) sum_k ||s||^k/(k!(n-k)!) A^{n-k} h_k(G).
double explicit_series_value(double y0, unsigned order, double quad_alpha,
                            double snorm, double gaussian, double* last_term) {
  std::vector<double> fact(order + 1);
  fact[0] = 1.0;
  for (unsigned m = 1; m <= order; ++m) fact[m] = fact[m - 1] * static_cast<double>(m);
  std::vector<double> pow_a(order + 1), pow_s(order + 1);
  pow_a[0] = 1.0;
  pow_s[0] = 1.0;
  for (unsigned m = 1; m <= order; ++m) {
    pow_a[m] = pow_a[m - 1] * quad_alpha;
    pow_s[m] = pow_s[m - 1] * snorm;
  }
  const std::vector<double> h =
      snorm > 0.0 ? hermite_poly_upto(order, gaussian) : std::vector<double>{1.0};

  double total = 0.0;
  double last = 0.0;
  for (unsigned n = 0; n <= order; ++n) {
    double inner = 0.0;
    const unsigned kmax = snorm > 0.0 ? n : 0;
    for (unsigned k = 0; k <= kmax; ++k) {
      inner += pow_s[k] / (fact[k] * fact[n - k]) * pow_a[n - k] * h[k];
    }
    const double term = inner / fact[n];
    total += term;
    last = std::abs(y0 * term);
  }
  if (last_term) *last_term = last;
  return y0 * total;
}

}  // namespace

double sigma_norm(const SpdeProblem& problem, double t, double x) {
  if (t < 0.0 || t > problem.extent_t || x < 0.0 || x > problem.extent_x) {
    throw std::domain_error("sigma_norm: point outside the domain rectangle");
  }
  const auto c = discretize(problem);
  const std::size_t it = node_index(t, c.dt, c.nt, "t");
  const std::size_t ix = node_index(x, c.dx, c.nx, "x");
  return std::sqrt(rectangle_sums(c, nullptr, it, ix).sigma_sq);
}

SeriesSolution series_solution(const SpdeProblem& problem, const NoiseGrid2D& grid,
                               double t, double x) {
  require_matching_grid(problem, grid);
  const auto c = discretize(problem);
  const std::size_t it = node_index(t, c.dt, c.nt, "t");
  const std::size_t ix = node_index(x, c.dx, c.nx, "x");
  const auto sums = rectangle_sums(c, &grid, it, ix);

  SeriesSolution out;
  out.quad_alpha = sums.quad_alpha;
  out.sigma_norm = std::sqrt(sums.sigma_sq);
  out.gaussian = out.sigma_norm > 0.0 ? sums.noise / out.sigma_norm : 0.0;
  out.value = explicit_series_value(problem.y0, problem.order, out.quad_alpha,
                                   out.sigma_norm, out.gaussian, &out.last_term);
  return out;
}

double mean_solution(const SpdeProblem& problem, double t, double x) {
  const auto c = discretize(problem);
  const std::size_t it = node_index(t, c.dt, c.nt, "t");
  const std::size_t ix = node_index(x, c.dx, c.nx, "x");
  const double quad_alpha = rectangle_sums(c, nullptr, it, ix).quad_alpha;
  return explicit_series_value(problem.y0, problem.order, quad_alpha, 0.0, 0.0, nullptr);
}

namespace {

// Rolling-row forward sweep. When `nodes` is non-null it receives the full
// (nt+1) x (nx+1) table; the return value is the corner Y(T, X).
double picard_sweep(const DiscreteCoefficients& c, const NoiseGrid2D& grid, double y0,
                    std::vector<double>* nodes) {
  const std::size_t cols = c.nx + 1;
  if (nodes) nodes->assign((c.nt + 1) * cols, y0);

  std::vector<double> s_prev(cols, 0.0), s_curr(cols, 0.0);
  std::vector<double> y_prev(cols, y0), y_curr(cols, y0);
  const double cell = c.dt * c.dx;

  double corner = y0;
  for (std::size_t i = 1; i <= c.nt; ++i) {
    s_curr[0] = 0.0;
    y_curr[0] = y0;
    const double* arow = c.alpha_mid.data() + (i - 1) * c.nx;
    const double* srow = c.sigma_mid.data() + (i - 1) * c.nx;
    const double* brow = grid.db.data() + (i - 1) * c.nx;
    for (std::size_t j = 1; j <= c.nx; ++j) {
      const double y_past = y_prev[j - 1];
      const double contribution =
          arow[j - 1] * y_past * cell + srow[j - 1] * y_past * brow[j - 1];
      s_curr[j] = s_prev[j] + s_curr[j - 1] - s_prev[j - 1] + contribution;
      y_curr[j] = y0 + s_curr[j];
    }
    if (nodes) {
      std::copy(y_curr.begin(), y_curr.end(), nodes->begin() + i * cols);
    }
    corner = y_curr[c.nx];
    std::swap(s_prev, s_curr);
    std::swap(y_prev, y_curr);
  }
  return corner;
}

}  // namespace

std::vector<double> picard_oracle(const SpdeProblem& problem, const NoiseGrid2D& grid) {
  require_matching_grid(problem, grid);
  const auto c = discretize(problem);
  std::vector<double> nodes;
  picard_sweep(c, grid, problem.y0, &nodes);
  return nodes;
}

std::vector<SpdeComparisonRow> compare_series_vs_oracle(
    const SpdeProblem& problem, std::span<const std::size_t> grid_sizes,
    std::size_t paths, std::uint64_t seed) {
  std::vector<SpdeComparisonRow> rows;
  rows.reserve(grid_sizes.size());
  for (const std::size_t size : grid_sizes) {
    SpdeProblem p = problem;
    p.nt = size;
    p.nx = size;
    const auto c = discretize(p);
    const auto det = rectangle_sums(c, nullptr, p.nt, p.nx);
    const double snorm = std::sqrt(det.sigma_sq);

    struct Sums {
      MomentSums oracle, series, gap;
      Sums merge(Sums o) const {
        Sums s = *this;
        s.oracle.merge(o.oracle);
        s.series.merge(o.series);
        s.gap.merge(o.gap);
        return s;
      }
    };
    const auto sums = chunked_reduce<Sums>(
        paths, 256,
        [&](std::uint64_t begin, std::uint64_t end) {
          Sums local;
          for (std::uint64_t path = begin; path < end; ++path) {
            const NoiseGrid2D grid =
                sample_noise_grid(seed, path, p.nt, p.nx, p.extent_t, p.extent_x);
            const double oracle = picard_sweep(c, grid, p.y0, nullptr);
            double noise = 0.0;
            for (std::size_t cell = 0; cell < grid.db.size(); ++cell) {
              noise += c.sigma_mid[cell] * grid.db[cell];
            }
            const double gaussian = snorm > 0.0 ? noise / snorm : 0.0;
            const double series = explicit_series_value(
                p.y0, p.order, det.quad_alpha, snorm, gaussian, nullptr);
            local.oracle.add(oracle);
            local.series.add(series);
            local.gap.add(series - oracle);
          }
          return local;
        },
        Sums{}, [](Sums acc, Sums part) { return acc.merge(part); });

    SpdeComparisonRow row;
    row.nt = p.nt;
    row.nx = p.nx;
    row.paths = paths;
    row.mean_gap = sums.gap.mean();
    row.rms_gap = paths ? std::sqrt(sums.gap.sum_sq / static_cast<double>(paths)) : 0.0;
    row.mean_series = sums.series.mean();
    row.mean_oracle = sums.oracle.mean();
    row.se_oracle = sums.oracle.std_error();
    rows.push_back(row);
  }
  return rows;
}

WickSkorohodResult wick_skorohod_solution(const SpdeProblem& problem,
                                          const ChaosExpansion& y0,
                                          const OmegaSample& omega, double t, double x,
                                          const WickSkorohodOptions& options) {
  if (y0.dimension() != 2) {
    throw std::domain_error("wick_skorohod_solution: y0 must live over the d=2 basis");
  }
  const auto c = discretize(problem);
  const std::size_t it = node_index(t, c.dt, c.nt, "t");
  const std::size_t ix = node_index(x, c.dx, c.nx, "x");
  const auto det = rectangle_sums(c, nullptr, it, ix);

  // Basis coefficients b_j = (sigma 1_rect, eta_j) by midpoint quadrature,
  // with per-axis Hermite-function tables at the cell midpoints.
  const std::size_t count = options.expansion_basis;
  const auto deltas = basis_table(2, count);
  std::uint32_t max_order = 1;
  for (const auto& delta : deltas) max_order = std::max({max_order, delta[0], delta[1]});

  std::vector<std::vector<double>> xi_t(it), xi_x(ix);
  for (std::size_t i = 0; i < it; ++i) {
    xi_t[i] = hermite_fn_upto(max_order, c.dt * (static_cast<double>(i) + 0.5));
  }
  for (std::size_t j = 0; j < ix; ++j) {
    xi_x[j] = hermite_fn_upto(max_order, c.dx * (static_cast<double>(j) + 0.5));
  }

  std::vector<double> b(count, 0.0);
  const double cell = c.dt * c.dx;
  for (std::size_t jj = 0; jj < count; ++jj) {
    const std::uint32_t ot = deltas[jj][0];
    const std::uint32_t ox = deltas[jj][1];
    double sum = 0.0;
    for (std::size_t i = 0; i < it; ++i) {
      double inner = 0.0;
      const double* srow = c.sigma_mid.data() + i * c.nx;
      for (std::size_t j = 0; j < ix; ++j) {
        inner += srow[j] * xi_x[j][ox - 1];
      }
      sum += inner * xi_t[i][ot - 1];
    }
    b[jj] = sum * cell;
  }

  double b_norm_sq = 0.0;
  for (double v : b) b_norm_sq += v * v;

  // S = sum_k S_k w_b^{<>k} with S_k = sum_{n=k}^{N} A^{n-k} / (k!(n-k)!n!),
  // the binomially regrouped Picard series of A + w_b.
  const unsigned order = problem.order;
  const unsigned kmax = std::min<unsigned>(options.max_wick_order, order);
  std::vector<double> fact(order + 1);
  fact[0] = 1.0;
  for (unsigned m = 1; m <= order; ++m) fact[m] = fact[m - 1] * static_cast<double>(m);

  const ChaosExpansion w_b = ChaosExpansion::first_chaos(2, b);
  ChaosExpansion series(2);
  ChaosExpansion wick_pow = ChaosExpansion::constant(2, 1.0);
  for (unsigned k = 0; k <= kmax; ++k) {
    if (k > 0) wick_pow = wick_product(wick_pow, w_b);
    double s_k = 0.0;
    double pow_a = 1.0;
    for (unsigned n = k; n <= order; ++n) {
      s_k += pow_a / (fact[k] * fact[n - k] * fact[n]);
      pow_a *= det.quad_alpha;
    }
    series += s_k * wick_pow;
  }

  const ChaosExpansion solution = wick_product(y0, series);

  WickSkorohodResult result;
  result.value = evaluate(solution, omega);
  result.expectation = expectation(solution);
  result.projected_sigma_norm = std::sqrt(b_norm_sq);
  result.grid_sigma_norm = std::sqrt(det.sigma_sq);
  return result;
}

std::string SpdeRunConfig::to_string() const {
  std::string out;
  out += "alpha = " + problem.alpha.to_string() + "\n";
  out += "sigma = " + problem.sigma.to_string() + "\n";
  out += "y0 = " + format_g17(problem.y0) + "\n";
  out += "T = " + format_g17(problem.extent_t) + "\n";
  out += "X = " + format_g17(problem.extent_x) + "\n";
  out += "nt = " + std::to_string(problem.nt) + "\n";
  out += "nx = " + std::to_string(problem.nx) + "\n";
  out += "N = " + std::to_string(problem.order) + "\n";
  out += "paths = " + std::to_string(paths) + "\n";
  out += "seed = " + std::to_string(seed) + "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void config_fail(std::size_t line_no, const std::string& why) {
  throw config_error("config line " + std::to_string(line_no) + ": " + why);
}

double parse_double(std::string_view value, std::size_t line_no) {
  const std::string text(value);
  char* end = nullptr;
  const double parsed = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    config_fail(line_no, "malformed number '" + text + "'");
  }
  return parsed;
}

template <class Int>
Int parse_integer(std::string_view value, std::size_t line_no) {
  Int parsed{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    config_fail(line_no, "malformed integer '" + std::string(value) + "'");
  }
  return parsed;
}

}  // namespace

SpdeRunConfig parse_spde_config(std::istream& in) {
  SpdeRunConfig config;
  config.problem.alpha = CoefficientField{CoefficientField::Kind::kConstant, 0.0};
  config.problem.sigma = CoefficientField{CoefficientField::Kind::kConstant, 0.0};

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) config_fail(line_no, "expected key = value");
    const std::string_view key = trim(stripped.substr(0, eq));
    const std::string_view value = trim(stripped.substr(eq + 1));
    if (value.empty()) config_fail(line_no, "empty value for '" + std::string(key) + "'");

    try {
      if (key == "alpha") {
        config.problem.alpha = CoefficientField::parse(value);
      } else if (key == "sigma") {
        config.problem.sigma = CoefficientField::parse(value);
      } else if (key == "y0") {
        config.problem.y0 = parse_double(value, line_no);
      } else if (key == "T") {
        config.problem.extent_t = parse_double(value, line_no);
        if (config.problem.extent_t <= 0.0) config_fail(line_no, "T must be positive");
      } else if (key == "X") {
        config.problem.extent_x = parse_double(value, line_no);
        if (config.problem.extent_x <= 0.0) config_fail(line_no, "X must be positive");
      } else if (key == "nt") {
        config.problem.nt = parse_integer<std::size_t>(value, line_no);
        if (config.problem.nt == 0) config_fail(line_no, "nt must be >= 1");
      } else if (key == "nx") {
        config.problem.nx = parse_integer<std::size_t>(value, line_no);
        if (config.problem.nx == 0) config_fail(line_no, "nx must be >= 1");
      } else if (key == "N") {
        config.problem.order = parse_integer<unsigned>(value, line_no);
      } else if (key == "paths") {
        config.paths = parse_integer<std::size_t>(value, line_no);
        if (config.paths == 0) config_fail(line_no, "paths must be >= 1");
      } else if (key == "seed") {
        config.seed = parse_integer<std::uint64_t>(value, line_no);
      } else {
        config_fail(line_no, "unknown key '" + std::string(key) + "'");
      }
    } catch (const std::invalid_argument& e) {
      config_fail(line_no, e.what());
    }
  }
  return config;
}

std::vector<SpdeExperimentRow> run_spde_experiment(const SpdeRunConfig& config) {
  const SpdeProblem& p = config.problem;
  const auto c = discretize(p);

  // Probe nodes nearest the half and full extents on each axis.
  std::vector<std::pair<std::size_t, std::size_t>> probes;
  const std::size_t half_t = std::max<std::size_t>(1, p.nt / 2);
  const std::size_t half_x = std::max<std::size_t>(1, p.nx / 2);
  for (std::size_t it : {half_t, p.nt}) {
    for (std::size_t ix : {half_x, p.nx}) {
      const std::pair<std::size_t, std::size_t> node{it, ix};
      if (std::find(probes.begin(), probes.end(), node) == probes.end()) {
        probes.push_back(node);
      }
    }
  }

  struct ProbeDet {
    double quad_alpha = 0.0;
    double snorm = 0.0;
  };
  std::vector<ProbeDet> det(probes.size());
  for (std::size_t q = 0; q < probes.size(); ++q) {
    const auto sums = rectangle_sums(c, nullptr, probes[q].first, probes[q].second);
    det[q] = {sums.quad_alpha, std::sqrt(sums.sigma_sq)};
  }

  struct Sums {
    std::vector<MomentSums> oracle, gap;
    Sums merge(Sums o) const {
      Sums s = *this;
      if (s.oracle.empty()) return o;
      for (std::size_t q = 0; q < s.oracle.size(); ++q) {
        s.oracle[q].merge(o.oracle[q]);
        s.gap[q].merge(o.gap[q]);
      }
      return s;
    }
  };
  Sums init;
  init.oracle.resize(probes.size());
  init.gap.resize(probes.size());

  const auto sums = chunked_reduce<Sums>(
      config.paths, 256,
      [&](std::uint64_t begin, std::uint64_t end) {
        Sums local;
        local.oracle.resize(probes.size());
        local.gap.resize(probes.size());
        std::vector<double> nodes;
        for (std::uint64_t path = begin; path < end; ++path) {
          const NoiseGrid2D grid =
              sample_noise_grid(config.seed, path, p.nt, p.nx, p.extent_t, p.extent_x);
          picard_sweep(c, grid, p.y0, &nodes);
          for (std::size_t q = 0; q < probes.size(); ++q) {
            const auto [it, ix] = probes[q];
            const auto rect = rectangle_sums(c, &grid, it, ix);
            const double gaussian = det[q].snorm > 0.0 ? rect.noise / det[q].snorm : 0.0;
            const double series = explicit_series_value(
                p.y0, p.order, det[q].quad_alpha, det[q].snorm, gaussian, nullptr);
            const double oracle = nodes[it * (p.nx + 1) + ix];
            local.oracle[q].add(oracle);
            local.gap[q].add(series - oracle);
          }
        }
        return local;
      },
      std::move(init), [](Sums acc, Sums part) { return acc.merge(part); });

  std::vector<SpdeExperimentRow> rows;
  rows.reserve(probes.size());
  for (std::size_t q = 0; q < probes.size(); ++q) {
    SpdeExperimentRow row;
    row.t = c.dt * static_cast<double>(probes[q].first);
    row.x = c.dx * static_cast<double>(probes[q].second);
    row.mean_series =
        explicit_series_value(p.y0, p.order, det[q].quad_alpha, 0.0, 0.0, nullptr);
    row.mean_oracle = sums.oracle[q].mean();
    row.se_oracle = sums.oracle[q].std_error();
    row.rms_path_gap = config.paths
                           ? std::sqrt(sums.gap[q].sum_sq / static_cast<double>(config.paths))
                           : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wnoise
