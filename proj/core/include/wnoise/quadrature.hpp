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

#ifndef WNOISE_QUADRATURE_HPP
#define WNOISE_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "wnoise/errors.hpp"

namespace wnoise {

namespace detail {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1] (positive abscissae;
// even positions are the embedded Gauss nodes).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kronrod = kKronrodWeights[7] * f(mid);
  double gauss = kGaussWeights[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// requested absolute tolerance. Throws numerical_error when bisection depth
/// is exhausted before the error estimate falls under the budget.
template <class F>
double adaptive_gauss_kronrod(F&& f, double a, double b,
                              const QuadratureOptions& opt = {}) {
  if (a == b) return 0.0;
  struct Interval {
    double a, b, tol;
    int depth;
  };
  std::vector<Interval> stack;
  stack.push_back({a, b, opt.abs_tol, 0});
  double total = 0.0;
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    const auto [value, error] = detail::gauss_kronrod_15(f, iv.a, iv.b);
    if (error <= iv.tol || error <= 1e-16 * std::abs(value)) {
      total += value;
      continue;
    }
    if (iv.depth >= opt.max_depth) {
      throw numerical_error("adaptive quadrature did not converge");
    }
    const double mid = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, mid, 0.5 * iv.tol, iv.depth + 1});
    stack.push_back({mid, iv.b, 0.5 * iv.tol, iv.depth + 1});
  }
  return total;
}

}  // namespace wnoise

#endif  // WNOISE_QUADRATURE_HPP
