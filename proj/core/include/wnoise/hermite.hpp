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

#ifndef WNOISE_HERMITE_HPP
#define WNOISE_HERMITE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wnoise/multi_index.hpp"

namespace wnoise {

/// Probabilists' Hermite polynomial h_n(x) by the three-term recurrence
/// h_{n+1}(x) = x h_n(x) - n h_{n-1}(x), h_0 = 1, h_1 = x.
double hermite_poly(unsigned n, double x);

/// Values h_0(x) .. h_nmax(x) in one recurrence pass.
std::vector<double> hermite_poly_upto(unsigned nmax, double x);

/// Hermite function xi_n(x), n >= 1: the L2(R)-orthonormal family
/// pi^{-1/4} ((n-1)!)^{-1/2} e^{-x^2/2} h_{n-1}(sqrt(2) x), evaluated with
/// the normalized recurrence
///   xi_{n+1}(x) = x sqrt(2/n) xi_n(x) - sqrt((n-1)/n) xi_{n-1}(x),
/// which stays bounded where the unnormalized form overflows near n ~ 170.
double hermite_fn(unsigned n, double x);

/// Values xi_1(x) .. xi_nmax(x) in one recurrence pass.
std::vector<double> hermite_fn_upto(unsigned nmax, double x);

/// A tensor basis element eta_j = xi_{delta_1} x ... x xi_{delta_d} of
/// L2(R^d), addressed by its linear index j in the enumerate_basis order.
struct BasisIndex {
  std::size_t d = 1;
  std::uint64_t j = 1;
  std::vector<std::uint32_t> delta;  // enumerate_basis(d, j)

  static BasisIndex make(std::size_t d, std::uint64_t j);
};

/// eta_j(u) = prod_k xi_{delta_k}(u_k). u.size() must equal b.d.
double eta(const BasisIndex& b, std::span<const double> u);

/// Rectangle integral int_0^x eta_j(u) du = prod_k int_0^{x_k} xi_{delta_k}.
/// All coordinates of x must be >= 0. One-dimensional factors are computed
/// by adaptive quadrature (abs tol 1e-10) and cached per (order, endpoint).
/// Throws numerical_error if the quadrature fails to converge.
double eta_rectangle_integral(const BasisIndex& b, std::span<const double> x);

/// int_0^upper xi_n(t) dt by adaptive quadrature, cached per (n, upper).
double xi_integral(unsigned n, double upper);

/// int_0^upper xi_n(t) dt for every n = 1..nmax in a single pass over a
/// composite Kronrod grid whose spacing resolves the oscillation of xi_nmax.
/// Index n-1 of the result holds the order-n integral.
std::vector<double> xi_integrals_upto(unsigned nmax, double upper);

}  // namespace wnoise

#endif  // WNOISE_HERMITE_HPP
