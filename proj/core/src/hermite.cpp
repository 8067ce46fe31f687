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

#include "wnoise/hermite.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "wnoise/quadrature.hpp"

namespace wnoise {

namespace {

// pi^{-1/4}; sqrt and division are correctly rounded, so the value is
// bit-identical on every IEEE platform.
const double kPiQuarterInv = 1.0 / std::sqrt(std::sqrt(3.14159265358979323846));

double xi_1(double x) { return kPiQuarterInv * std::exp(-0.5 * x * x); }

struct XiCacheKey {
  unsigned n;
  std::uint64_t x_bits;
  bool operator==(const XiCacheKey&) const = default;
};

struct XiCacheKeyHash {
  std::size_t operator()(const XiCacheKey& k) const noexcept {
    std::uint64_t h = k.x_bits ^ (0x9e3779b97f4a7c15ULL * (k.n + 1));
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

std::mutex g_xi_cache_mutex;
std::unordered_map<XiCacheKey, double, XiCacheKeyHash> g_xi_cache;

// Oscillation wavenumber bound for xi_n: zeros are spaced ~pi/sqrt(2n+1)
// in the classically allowed region.
double oscillation_rate(unsigned n) { return std::sqrt(2.0 * n + 1.0); }

}  // namespace

double hermite_poly(unsigned n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = x * curr - static_cast<double>(k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> hermite_poly_upto(unsigned nmax, double x) {
  std::vector<double> h(nmax + 1);
  h[0] = 1.0;
  if (nmax >= 1) h[1] = x;
  for (unsigned k = 1; k < nmax; ++k) {
    h[k + 1] = x * h[k] - static_cast<double>(k) * h[k - 1];
  }
  return h;
}

double hermite_fn(unsigned n, double x) {
  if (n == 0) throw std::invalid_argument("hermite_fn: order is 1-based");
  double prev = 0.0;
  double curr = xi_1(x);
  for (unsigned k = 1; k < n; ++k) {
    const double next = x * std::sqrt(2.0 / k) * curr -
                        std::sqrt((k - 1.0) / k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> hermite_fn_upto(unsigned nmax, double x) {
  if (nmax == 0) throw std::invalid_argument("hermite_fn_upto: order is 1-based");
  std::vector<double> xi(nmax);
  xi[0] = xi_1(x);
  double prev = 0.0;
  for (unsigned k = 1; k < nmax; ++k) {
    xi[k] = x * std::sqrt(2.0 / k) * xi[k - 1] - std::sqrt((k - 1.0) / k) * prev;
    prev = xi[k - 1];
  }
  return xi;
}

BasisIndex BasisIndex::make(std::size_t d, std::uint64_t j) {
  return BasisIndex{d, j, enumerate_basis(d, j)};
}

double eta(const BasisIndex& b, std::span<const double> u) {
  if (u.size() != b.d) throw std::domain_error("eta: point dimension mismatch");
  double prod = 1.0;
  for (std::size_t k = 0; k < b.d; ++k) {
    prod *= hermite_fn(b.delta[k], u[k]);
  }
  return prod;
}

double xi_integral(unsigned n, double upper) {
  if (n == 0) throw std::invalid_argument("xi_integral: order is 1-based");
  if (upper == 0.0) return 0.0;

  const XiCacheKey key{n, std::bit_cast<std::uint64_t>(upper)};
  {
    std::lock_guard<std::mutex> lock(g_xi_cache_mutex);
    auto it = g_xi_cache.find(key);
    if (it != g_xi_cache.end()) return it->second;
  }

  // Pre-split so each adaptive call sees at most a few oscillations; the
  // integrand decays like exp(-x^2/2) outside |x| ~ sqrt(2n).
  const double rate = oscillation_rate(n);
  const double chunk = 4.0 / rate;
  const double lo = 0.0;
  const double hi = upper;
  const double span = hi - lo;
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(span) / chunk)));
  const QuadratureOptions opt{1e-10 / pieces, 40};
  double total = 0.0;
  for (int p = 0; p < pieces; ++p) {
    const double a = lo + span * (static_cast<double>(p) / pieces);
    const double b = lo + span * (static_cast<double>(p + 1) / pieces);
    total += adaptive_gauss_kronrod([n](double t) { return hermite_fn(n, t); }, a, b, opt);
  }

  std::lock_guard<std::mutex> lock(g_xi_cache_mutex);
  g_xi_cache.emplace(key, total);
  return total;
}

std::vector<double> xi_integrals_upto(unsigned nmax, double upper) {
  if (nmax == 0) throw std::invalid_argument("xi_integrals_upto: order is 1-based");
  std::vector<double> totals(nmax, 0.0);
  if (upper == 0.0) return totals;

  // Composite K15 panels: ~2.4 radians of the fastest oscillation per panel
  // keeps the rule's error orders of magnitude below 1e-10.
  const double rate = oscillation_rate(nmax);
  const double panel = 2.4 / rate;
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(upper) / panel)));
  for (int p = 0; p < pieces; ++p) {
    const double a = upper * (static_cast<double>(p) / pieces);
    const double b = upper * (static_cast<double>(p + 1) / pieces);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < 8; ++i) {
      const double w = half * detail::kKronrodWeights[i];
      if (i == 7) {
        const auto xi = hermite_fn_upto(nmax, mid);
        for (unsigned n = 0; n < nmax; ++n) totals[n] += w * xi[n];
      } else {
        const double dx = half * detail::kKronrodNodes[i];
        const auto lo_vals = hermite_fn_upto(nmax, mid - dx);
        const auto hi_vals = hermite_fn_upto(nmax, mid + dx);
        for (unsigned n = 0; n < nmax; ++n) totals[n] += w * (lo_vals[n] + hi_vals[n]);
      }
    }
  }
  return totals;
}

double eta_rectangle_integral(const BasisIndex& b, std::span<const double> x) {
  if (x.size() != b.d) throw std::domain_error("eta_rectangle_integral: corner dimension mismatch");
  for (double c : x) {
    if (c < 0.0) throw std::domain_error("eta_rectangle_integral: corner must be in the nonnegative orthant");
  }
  double prod = 1.0;
  for (std::size_t k = 0; k < b.d; ++k) {
    if (x[k] == 0.0) return 0.0;
    prod *= xi_integral(b.delta[k], x[k]);
  }
  return prod;
}

}  // namespace wnoise
