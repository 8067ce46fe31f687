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

#include "wnoise/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wnoise {

namespace {

void strip_trailing_zeros(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("multi-index factorial exceeds 64-bit range");
  }
  return out;
}

// Compositions of `total` into `parts` strictly positive summands.
std::uint64_t composition_count(std::uint64_t total, std::uint64_t parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  // C(total-1, parts-1), exact with overflow detection.
  std::uint64_t n = total - 1;
  std::uint64_t k = parts - 1;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i at every step.
    std::uint64_t num = checked_mul(result, n - k + i);
    result = num / i;
  }
  return result;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  strip_trailing_zeros(entries_);
  degree_ = std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> entries)
    : MultiIndex(std::vector<std::uint32_t>(entries)) {}

MultiIndex MultiIndex::unit(std::size_t position) {
  if (position == 0) throw std::domain_error("multi-index positions are 1-based");
  std::vector<std::uint32_t> v(position, 0);
  v[position - 1] = 1;
  return MultiIndex(std::move(v));
}

std::uint32_t MultiIndex::entry(std::size_t position) const noexcept {
  if (position == 0 || position > entries_.size()) return 0;
  return entries_[position - 1];
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

std::uint64_t factorial(const MultiIndex& alpha) {
  std::uint64_t result = 1;
  for (std::uint32_t a : alpha.entries()) {
    for (std::uint32_t m = 2; m <= a; ++m) {
      result = checked_mul(result, m);
    }
  }
  return result;
}

double weight_2n(const MultiIndex& alpha, double q) {
  double result = 1.0;
  const auto& e = alpha.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const double base = 2.0 * static_cast<double>(i + 1);
    result *= std::pow(base, q * static_cast<double>(e[i]));
  }
  return result;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::vector<std::uint32_t> out(std::max(ea.size(), eb.size()), 0);
  for (std::size_t i = 0; i < ea.size(); ++i) out[i] += ea[i];
  for (std::size_t i = 0; i < eb.size(); ++i) out[i] += eb[i];
  return MultiIndex(std::move(out));
}

MultiIndex subtract_unit(const MultiIndex& alpha, std::size_t k) {
  if (alpha.entry(k) == 0) {
    throw std::domain_error("subtract_unit: entry at position " + std::to_string(k) +
                            " of " + alpha.to_string() + " is zero");
  }
  std::vector<std::uint32_t> out = alpha.entries();
  out[k - 1] -= 1;
  return MultiIndex(std::move(out));
}

std::vector<std::uint32_t> enumerate_basis(std::size_t d, std::uint64_t j) {
  if (d == 0) throw std::domain_error("enumerate_basis: d must be >= 1");
  if (j == 0) throw std::domain_error("enumerate_basis: j is 1-based");
  if (d == 1) return {static_cast<std::uint32_t>(j)};

  // Locate the total degree block containing rank j.
  std::uint64_t total = d;
  std::uint64_t rank = j;
  for (;;) {
    const std::uint64_t block = composition_count(total, d);
    if (rank <= block) break;
    rank -= block;
    ++total;
  }

  // Unrank the composition lexicographically within its degree block.
  std::vector<std::uint32_t> delta(d, 0);
  std::uint64_t remaining = total;
  for (std::size_t pos = 0; pos + 1 < d; ++pos) {
    const std::uint64_t parts_left = d - pos - 1;
    for (std::uint32_t v = 1;; ++v) {
      const std::uint64_t completions = composition_count(remaining - v, parts_left);
      if (rank <= completions) {
        delta[pos] = v;
        remaining -= v;
        break;
      }
      rank -= completions;
    }
  }
  delta[d - 1] = static_cast<std::uint32_t>(remaining);
  return delta;
}

std::vector<std::vector<std::uint32_t>> basis_table(std::size_t d, std::uint64_t count) {
  if (d == 0) throw std::domain_error("basis_table: d must be >= 1");
  std::vector<std::vector<std::uint32_t>> table;
  table.reserve(count);
  if (d == 1) {
    for (std::uint64_t j = 1; j <= count; ++j) table.push_back({static_cast<std::uint32_t>(j)});
    return table;
  }
  // Walk degree blocks, emitting the lexicographically ascending compositions
  // of each degree by successor stepping.
  std::uint64_t total = d;
  while (table.size() < count) {
    std::vector<std::uint32_t> c(d, 1);
    c[d - 1] = static_cast<std::uint32_t>(total - (d - 1));
    for (;;) {
      table.push_back(c);
      if (table.size() == count) return table;
      // Lex successor within the block: rightmost i < d-1 whose tail sum can
      // afford c[i]+1 while keeping every later slot >= 1.
      bool advanced = false;
      std::uint64_t tail = c[d - 1];
      for (std::size_t i = d - 1; i-- > 0;) {
        tail += c[i];
        if (tail >= static_cast<std::uint64_t>(c[i]) + 1 + (d - i - 1)) {
          c[i] += 1;
          std::uint64_t rest = tail - c[i];
          for (std::size_t t = i + 1; t + 1 < d; ++t) {
            c[t] = 1;
            rest -= 1;
          }
          c[d - 1] = static_cast<std::uint32_t>(rest);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // degree block exhausted
    }
    ++total;
  }
  return table;
}

}  // namespace wnoise
