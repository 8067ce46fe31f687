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

#include "wnoise/chaos.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wnoise/format.hpp"
#include "wnoise/hermite.hpp"

namespace wnoise {

namespace {

void require_same_dimension(const ChaosExpansion& a, const ChaosExpansion& b,
                            const char* op) {
  if (a.dimension() != b.dimension()) {
    throw std::domain_error(std::string(op) + ": parameter dimension mismatch");
  }
}

}  // namespace

ChaosExpansion::ChaosExpansion(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw std::domain_error("ChaosExpansion: dimension must be >= 1");
}

ChaosExpansion ChaosExpansion::constant(std::size_t dimension, double value) {
  ChaosExpansion f(dimension);
  f.set_coefficient(MultiIndex{}, value);
  return f;
}

ChaosExpansion ChaosExpansion::basis_term(std::size_t dimension, const MultiIndex& alpha,
                                          double coefficient) {
  ChaosExpansion f(dimension);
  f.set_coefficient(alpha, coefficient);
  return f;
}

ChaosExpansion ChaosExpansion::first_chaos(std::size_t dimension,
                                           std::span<const double> a) {
  ChaosExpansion f(dimension);
  for (std::size_t j = 0; j < a.size(); ++j) {
    f.set_coefficient(MultiIndex::unit(j + 1), a[j]);
  }
  return f;
}

double ChaosExpansion::coefficient(const MultiIndex& alpha) const noexcept {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0.0 : it->second;
}

void ChaosExpansion::set_coefficient(const MultiIndex& alpha, double value) {
  if (value == 0.0) {
    terms_.erase(alpha);
  } else {
    terms_[alpha] = value;
  }
}

std::uint64_t ChaosExpansion::max_degree() const noexcept {
  // Terms are degree-ordered, so the last term carries the maximum degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::size_t ChaosExpansion::max_basis() const noexcept {
  std::size_t max_pos = 0;
  for (const auto& [alpha, c] : terms_) {
    max_pos = std::max(max_pos, alpha.max_position());
  }
  return max_pos;
}

ChaosExpansion& ChaosExpansion::operator+=(const ChaosExpansion& other) {
  require_same_dimension(*this, other, "chaos sum");
  for (const auto& [alpha, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
  return *this;
}

ChaosExpansion& ChaosExpansion::operator-=(const ChaosExpansion& other) {
  require_same_dimension(*this, other, "chaos difference");
  for (const auto& [alpha, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(alpha, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
  return *this;
}

ChaosExpansion& ChaosExpansion::operator*=(double scalar) {
  if (scalar == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

double l2_norm_sq(const ChaosExpansion& f) {
  double sum = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    sum += static_cast<double>(factorial(alpha)) * c * c;
  }
  return sum;
}

double hida_norm_sq(const ChaosExpansion& f, double q) {
  double sum = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    sum += static_cast<double>(factorial(alpha)) * c * c * weight_2n(alpha, -q);
  }
  return sum;
}

double test_norm_sq(const ChaosExpansion& f, unsigned k) {
  double sum = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    const double fact = static_cast<double>(factorial(alpha));
    sum += c * c * fact * fact * weight_2n(alpha, static_cast<double>(k));
  }
  return sum;
}

ChaosExpansion wick_product(const ChaosExpansion& f, const ChaosExpansion& g) {
  require_same_dimension(f, g, "wick_product");
  ChaosExpansion out(f.dimension());
  std::map<MultiIndex, double> acc;
  for (const auto& [alpha, a] : f.terms()) {
    for (const auto& [beta, b] : g.terms()) {
      acc[add(alpha, beta)] += a * b;
    }
  }
  for (auto& [gamma, c] : acc) {
    if (c != 0.0) out.set_coefficient(gamma, c);
  }
  return out;
}

ChaosExpansion wick_power(const ChaosExpansion& f, unsigned n) {
  ChaosExpansion result = ChaosExpansion::constant(f.dimension(), 1.0);
  if (n == 0) return result;
  ChaosExpansion base = f;
  unsigned e = n;
  for (;;) {
    if (e & 1u) result = wick_product(result, base);
    e >>= 1u;
    if (e == 0) break;
    base = wick_product(base, base);
  }
  return result;
}

WickExp wick_exp(const ChaosExpansion& f, unsigned order) {
  if (f.coefficient(MultiIndex{}) != 0.0) {
    throw std::domain_error(
        "wick_exp: nonzero constant term; factor exp(c) out and pass f - c");
  }
  WickExp result{ChaosExpansion::constant(f.dimension(), 1.0), 1.0};
  ChaosExpansion term = ChaosExpansion::constant(f.dimension(), 1.0);
  for (unsigned n = 1; n <= order; ++n) {
    term = wick_product(term, f);
    term *= 1.0 / static_cast<double>(n);
    result.series += term;
  }
  if (order > 0) result.last_term_hida_norm = std::sqrt(hida_norm_sq(term, 2.0));
  return result;
}

ChaosExpansion truncate(const ChaosExpansion& f, std::uint64_t max_degree,
                        std::size_t max_basis) {
  ChaosExpansion out(f.dimension());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.degree() > max_degree) continue;
    if (alpha.max_position() > max_basis) continue;
    out.set_coefficient(alpha, c);
  }
  return out;
}

double evaluate(const ChaosExpansion& f, const OmegaSample& omega) {
  const std::size_t needed = f.max_basis();
  if (needed > omega.truncation()) {
    throw std::domain_error("evaluate: omega truncation " +
                            std::to_string(omega.truncation()) +
                            " below required basis position " + std::to_string(needed));
  }
  // Per-position Hermite value tables up to the largest degree used there.
  std::vector<std::uint32_t> max_deg(needed, 0);
  for (const auto& [alpha, c] : f.terms()) {
    const auto& e = alpha.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      max_deg[i] = std::max(max_deg[i], e[i]);
    }
  }
  std::vector<std::vector<double>> h(needed);
  for (std::size_t i = 0; i < needed; ++i) {
    if (max_deg[i] > 0) h[i] = hermite_poly_upto(max_deg[i], omega.theta[i]);
  }
  double sum = 0.0;
  for (const auto& [alpha, c] : f.terms()) {
    double prod = c;
    const auto& e = alpha.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) prod *= h[i][e[i]];
    }
    sum += prod;
  }
  return sum;
}

double expectation(const ChaosExpansion& f) { return f.coefficient(MultiIndex{}); }

std::string to_text(const ChaosExpansion& f) {
  std::string out = "d=" + std::to_string(f.dimension()) + "\n";
  for (const auto& [alpha, c] : f.terms()) {
    out += "alpha=";
    const auto& e = alpha.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(e[i]);
    }
    out += " c=";
    out += format_g17(c);
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  throw std::runtime_error("chaos text line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

ChaosExpansion chaos_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t dimension = 0;

  // Header.
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("d=", 0) != 0) parse_fail(line_no, "expected header d=<int>");
    const char* begin = line.data() + 2;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, dimension);
    if (ec != std::errc{} || ptr != end || dimension == 0) {
      parse_fail(line_no, "malformed dimension");
    }
    break;
  }
  if (dimension == 0) throw std::runtime_error("chaos text: missing d=<int> header");

  ChaosExpansion f(dimension);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("alpha=", 0) != 0) parse_fail(line_no, "expected alpha=<entries>");
    const std::size_t space = line.find(' ');
    if (space == std::string::npos) parse_fail(line_no, "missing coefficient field");
    const std::string_view alpha_text(line.data() + 6, space - 6);
    const std::string_view c_field(line.data() + space + 1, line.size() - space - 1);
    if (c_field.rfind("c=", 0) != 0) parse_fail(line_no, "expected c=<decimal>");

    std::vector<std::uint32_t> entries;
    if (!alpha_text.empty()) {
      std::size_t pos = 0;
      while (pos <= alpha_text.size()) {
        std::size_t comma = alpha_text.find(',', pos);
        if (comma == std::string_view::npos) comma = alpha_text.size();
        std::uint32_t v = 0;
        auto [ptr, ec] =
            std::from_chars(alpha_text.data() + pos, alpha_text.data() + comma, v);
        if (ec != std::errc{} || ptr != alpha_text.data() + comma) {
          parse_fail(line_no, "malformed multi-index entry");
        }
        entries.push_back(v);
        pos = comma + 1;
        if (comma == alpha_text.size()) break;
      }
    }

    const std::string c_text(c_field.substr(2));
    char* parse_end = nullptr;
    const double c = std::strtod(c_text.c_str(), &parse_end);
    if (parse_end != c_text.c_str() + c_text.size() || c_text.empty()) {
      parse_fail(line_no, "malformed coefficient");
    }
    const MultiIndex alpha(std::move(entries));
    if (f.coefficient(alpha) != 0.0) parse_fail(line_no, "duplicate term " + alpha.to_string());
    f.set_coefficient(alpha, c);
  }
  return f;
}

}  // namespace wnoise
