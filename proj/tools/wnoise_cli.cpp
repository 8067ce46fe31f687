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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wnoise/errors.hpp"
#include "wnoise/format.hpp"
#include "wnoise/gaussian_field.hpp"
#include "wnoise/ito.hpp"
#include "wnoise/malliavin.hpp"
#include "wnoise/parallel.hpp"
#include "wnoise/rng.hpp"
#include "wnoise/spde.hpp"
#include "wnoise/version.hpp"

namespace {

using namespace wnoise;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// Every CSV starts with '#'-prefixed metadata recording the version, the
// generator, the seed and the full effective configuration, so a run is
// reproducible from its own output.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }

  std::ostream& out() { return file_ ? *file_ : std::cout; }

  void meta(const std::string& key, const std::string& value) {
    out() << "# " << key << "=" << value << "\n";
  }

  void line(const std::string& text) { out() << text << "\n"; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join_coords(const std::vector<double>& point) {
  std::string text;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) text += ':';
    text += format_g17(point[i]);
  }
  return text;
}

struct SheetArgs {
  int d = 1;
  std::size_t basis = 0;  // 0 resolves to the per-dimension default
  std::size_t grid = 0;   // 0 = expansion sampling, >0 = grid cells per axis
  std::size_t paths = 100000;
  std::uint64_t seed = 1;
  std::string out;
};

int run_sheet(const SheetArgs& args) {
  const std::size_t basis = args.basis ? args.basis : (args.d == 1 ? 2000 : 3000);
  std::vector<std::vector<double>> points;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (args.d == 1) {
    points = {{0.5}, {1.0}};
    pairs = {{0, 0}, {0, 1}, {1, 1}};
  } else {
    points = {{1.0, 1.0}, {0.5, 1.0}};
    pairs = {{0, 0}, {0, 1}, {1, 1}};
  }

  auto theory = [&](std::size_t a, std::size_t b) {
    double prod = 1.0;
    for (std::size_t k = 0; k < points[a].size(); ++k) {
      prod *= std::min(points[a][k], points[b][k]);
    }
    return prod;
  };

  // Per-pair product moments, accumulated deterministically.
  struct Sums {
    std::vector<MomentSums> pair_products;
    Sums merge(Sums o) const {
      Sums s = *this;
      if (s.pair_products.empty()) return o;
      for (std::size_t q = 0; q < s.pair_products.size(); ++q) {
        s.pair_products[q].merge(o.pair_products[q]);
      }
      return s;
    }
  };
  Sums init;
  init.pair_products.resize(pairs.size());

  Sums sums;
  if (args.grid == 0) {
    std::vector<std::vector<double>> coeffs(points.size());
    for (std::size_t q = 0; q < points.size(); ++q) {
      coeffs[q] = sheet_coefficients(args.d, points[q], basis);
    }
    sums = chunked_reduce<Sums>(
        args.paths, 4096,
        [&](std::uint64_t begin, std::uint64_t end) {
          Sums local;
          local.pair_products.resize(pairs.size());
          for (std::uint64_t path = begin; path < end; ++path) {
            const OmegaSample omega = sample_omega(args.seed, path, basis);
            std::vector<double> values(points.size());
            for (std::size_t q = 0; q < points.size(); ++q) {
              values[q] = wiener_integral(coeffs[q], omega);
            }
            for (std::size_t q = 0; q < pairs.size(); ++q) {
              local.pair_products[q].add(values[pairs[q].first] * values[pairs[q].second]);
            }
          }
          return local;
        },
        std::move(init), [](Sums acc, Sums part) { return acc.merge(part); });
  } else {
    const std::size_t cells = args.grid;
    std::vector<std::pair<std::size_t, std::size_t>> nodes(points.size());
    for (std::size_t q = 0; q < points.size(); ++q) {
      nodes[q] = {static_cast<std::size_t>(points[q][0] * cells + 0.5),
                  static_cast<std::size_t>(points[q][1] * cells + 0.5)};
    }
    sums = chunked_reduce<Sums>(
        args.paths, 1024,
        [&](std::uint64_t begin, std::uint64_t end) {
          Sums local;
          local.pair_products.resize(pairs.size());
          for (std::uint64_t path = begin; path < end; ++path) {
            const NoiseGrid2D grid = sample_noise_grid(args.seed, path, cells, cells, 1.0, 1.0);
            std::vector<double> values(points.size());
            for (std::size_t q = 0; q < points.size(); ++q) {
              values[q] = sheet_from_grid(grid, nodes[q].first, nodes[q].second);
            }
            for (std::size_t q = 0; q < pairs.size(); ++q) {
              local.pair_products[q].add(values[pairs[q].first] * values[pairs[q].second]);
            }
          }
          return local;
        },
        std::move(init), [](Sums acc, Sums part) { return acc.merge(part); });
  }

  CsvWriter csv(args.out);
  csv.meta("wnoise", std::string(kVersion));
  csv.meta("generator", std::string(kGeneratorName));
  csv.meta("subcommand", "sheet");
  csv.meta("d", std::to_string(args.d));
  csv.meta("J", std::to_string(basis));
  csv.meta("grid", std::to_string(args.grid));
  csv.meta("paths", std::to_string(args.paths));
  csv.meta("seed", std::to_string(args.seed));
  csv.line("x,y,emp_cov,theory_cov,std_err,paths");
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    const auto& m = sums.pair_products[q];
    csv.line(join_coords(points[pairs[q].first]) + "," + join_coords(points[pairs[q].second]) +
             "," + format_g17(m.mean()) + "," + format_g17(theory(pairs[q].first, pairs[q].second)) +
             "," + format_g17(m.std_error()) + "," + std::to_string(args.paths));
  }
  return 0;
}

struct WickDemoArgs {
  double extent = 1.0;
  std::size_t steps = 4096;
  std::uint64_t seed = 1;
  std::string out;
};

int run_wick_demo(const WickDemoArgs& args) {
  const WickItoReport report = wick_ito_demo(args.extent, args.steps, args.seed);

  CsvWriter csv(args.out);
  csv.meta("wnoise", std::string(kVersion));
  csv.meta("generator", std::string(kGeneratorName));
  csv.meta("subcommand", "wick-demo");
  csv.meta("T", format_g17(args.extent));
  csv.meta("steps", std::to_string(args.steps));
  csv.meta("seed", std::to_string(args.seed));
  csv.line("quantity,steps,value");
  csv.line("ito_integral," + std::to_string(args.steps) + "," + format_g17(report.ito_integral));
  csv.line("ito_formula," + std::to_string(args.steps) + "," + format_g17(report.ito_formula));
  csv.line("wick_square," + std::to_string(args.steps) + "," + format_g17(report.wick_square));
  csv.line("gap_formula_wick," + std::to_string(args.steps) + "," +
           format_g17(report.gap_formula_wick));

  // Refinement sweep on the same underlying path: the finest increments are
  // regrouped into coarser partitions, so every level sees one Brownian path.
  const BrownianPath1D fine =
      args.extent > 0.0 && args.steps > 0
          ? sample_path_1d(args.seed, 0, args.steps, args.extent)
          : BrownianPath1D{};
  for (const std::size_t level : {args.steps / 8, args.steps / 4, args.steps / 2, args.steps}) {
    double gap = 0.0;
    if (args.extent > 0.0 && level > 0) {
      const std::size_t group = args.steps / level;
      std::vector<double> db(level, 0.0);
      for (std::size_t i = 0; i < level; ++i) {
        for (std::size_t g = 0; g < group; ++g) db[i] += fine.increments[i * group + g];
      }
      double node = 0.0;
      double integral = 0.0;
      for (std::size_t i = 0; i < level; ++i) {
        integral += node * db[i];
        node += db[i];
      }
      gap = integral - (0.5 * node * node - 0.5 * args.extent);
    }
    csv.line("gap_integral_formula," + std::to_string(level) + "," + format_g17(gap));
  }
  return 0;
}

struct ClarkOconeArgs {
  std::string which = "B_T";
  std::size_t steps = 4096;
  std::size_t paths = 1000;
  std::uint64_t seed = 1;
  std::string out;
};

int run_clark_ocone(const ClarkOconeArgs& args) {
  ClarkOconeCase which = ClarkOconeCase::kBrownianTerminal;
  if (args.which == "B_T") {
    which = ClarkOconeCase::kBrownianTerminal;
  } else if (args.which == "B_T_squared") {
    which = ClarkOconeCase::kBrownianTerminalSquared;
  } else if (args.which == "wick_exp_phi") {
    which = ClarkOconeCase::kWickExponential;
  }

  const std::vector<std::size_t> levels = {args.steps / 8, args.steps / 4, args.steps / 2,
                                           args.steps};
  const auto rows = clark_ocone_reconstruct(which, levels, args.paths, args.seed);

  CsvWriter csv(args.out);
  csv.meta("wnoise", std::string(kVersion));
  csv.meta("generator", std::string(kGeneratorName));
  csv.meta("subcommand", "clark-ocone");
  csv.meta("case", args.which);
  csv.meta("steps", std::to_string(args.steps));
  csv.meta("paths", std::to_string(args.paths));
  csv.meta("seed", std::to_string(args.seed));
  csv.line("case,steps,paths,rms_error,mean_abs_error");
  for (const auto& row : rows) {
    csv.line(args.which + "," + std::to_string(row.steps) + "," + std::to_string(row.paths) +
             "," + format_g17(row.rms_error) + "," + format_g17(row.mean_abs_error));
  }
  return 0;
}

struct SpdeArgs {
  std::string config;
  std::string out;
};

int run_spde(const SpdeArgs& args) {
  std::ifstream in(args.config);
  if (!in) {
    std::cerr << "error: cannot open config file '" << args.config << "'\n";
    return kExitUsage;
  }
  const SpdeRunConfig config = parse_spde_config(in);
  const auto rows = run_spde_experiment(config);

  CsvWriter csv(args.out);
  csv.meta("wnoise", std::string(kVersion));
  csv.meta("generator", std::string(kGeneratorName));
  csv.meta("subcommand", "spde");
  std::istringstream echo(config.to_string());
  std::string line;
  while (std::getline(echo, line)) {
    const std::size_t eq = line.find(" = ");
    csv.meta(line.substr(0, eq), line.substr(eq + 3));
  }
  csv.line("t,x,mean_series,mean_oracle,se_oracle,rms_path_gap");
  for (const auto& row : rows) {
    csv.line(format_g17(row.t) + "," + format_g17(row.x) + "," + format_g17(row.mean_series) +
             "," + format_g17(row.mean_oracle) + "," + format_g17(row.se_oracle) + "," +
             format_g17(row.rms_path_gap));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"white-noise calculus experiments (chaos expansions, Brownian "
               "sheets, Wick algebra, Clark-Ocone, population SPDE)"};
  app.require_subcommand(1);

  SheetArgs sheet_args;
  CLI::App* sheet = app.add_subcommand(
      "sheet", "Brownian sheet covariance check against prod min(x_i, y_i)");
  sheet->add_option("--d", sheet_args.d, "parameter dimension")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  sheet->add_option("--J", sheet_args.basis,
                    "expansion truncation (default 2000 for d=1, 3000 for d=2)");
  sheet->add_option("--grid", sheet_args.grid,
                    "cells per axis for grid-based sampling (d=2 only; 0 = expansion)");
  sheet->add_option("--paths", sheet_args.paths, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sheet->add_option("--seed", sheet_args.seed, "generator seed")->capture_default_str();
  sheet->add_option("--out", sheet_args.out, "output CSV path (default stdout)");

  WickDemoArgs wick_args;
  CLI::App* wick = app.add_subcommand(
      "wick-demo", "discrete Ito integral of B dB vs the Ito formula vs Wick algebra");
  wick->add_option("--T", wick_args.extent, "time horizon")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wick->add_option("--steps", wick_args.steps, "finest partition size (multiple of 8)")
      ->capture_default_str();
  wick->add_option("--seed", wick_args.seed, "generator seed")->capture_default_str();
  wick->add_option("--out", wick_args.out, "output CSV path (default stdout)");

  ClarkOconeArgs co_args;
  CLI::App* clark = app.add_subcommand(
      "clark-ocone", "pathwise reconstruction from the representation formula");
  clark->add_option("--case", co_args.which, "functional to reconstruct")
      ->check(CLI::IsMember({"B_T", "B_T_squared", "wick_exp_phi"}))
      ->capture_default_str();
  clark->add_option("--steps", co_args.steps, "finest partition size (multiple of 8)")
      ->capture_default_str();
  clark->add_option("--paths", co_args.paths, "Monte Carlo path count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  clark->add_option("--seed", co_args.seed, "generator seed")->capture_default_str();
  clark->add_option("--out", co_args.out, "output CSV path (default stdout)");

  SpdeArgs spde_args;
  CLI::App* spde = app.add_subcommand(
      "spde", "series solution vs discrete oracle for the population equation");
  spde->add_option("--config", spde_args.config, "problem config file")
      ->required()
      ->check(CLI::ExistingFile);
  spde->add_option("--out", spde_args.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sheet->parsed()) {
      if (sheet_args.grid > 0 && sheet_args.d != 2) {
        std::cerr << "error: --grid requires --d 2\n";
        return kExitUsage;
      }
      if (sheet_args.grid % 2 != 0) {
        if (sheet_args.grid != 0) {
          std::cerr << "error: --grid must be even so 0.5 lies on a node\n";
          return kExitUsage;
        }
      }
      return run_sheet(sheet_args);
    }
    if (wick->parsed()) {
      if (wick_args.steps < 8 || wick_args.steps % 8 != 0) {
        std::cerr << "error: --steps must be a positive multiple of 8\n";
        return kExitUsage;
      }
      return run_wick_demo(wick_args);
    }
    if (clark->parsed()) {
      if (co_args.steps < 8 || co_args.steps % 8 != 0) {
        std::cerr << "error: --steps must be a positive multiple of 8\n";
        return kExitUsage;
      }
      return run_clark_ocone(co_args);
    }
    if (spde->parsed()) {
      return run_spde(spde_args);
    }
  } catch (const wnoise::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wnoise::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::overflow_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
