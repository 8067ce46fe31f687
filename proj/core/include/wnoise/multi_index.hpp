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

#ifndef WNOISE_MULTI_INDEX_HPP
#define WNOISE_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wnoise {

/// A finitely supported sequence of nonnegative integers.
///
/// Positions are 1-based. Values are kept in canonical sparse form: the
/// stored vector never has trailing zeros, so equality of canonical forms
/// is equality of sequences. Instances are immutable after construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> entries);
  MultiIndex(std::initializer_list<std::uint32_t> entries);

  /// The unit index with a single 1 at `position` (1-based).
  static MultiIndex unit(std::size_t position);

  /// Dense entries without trailing zeros. entries()[i] is position i+1.
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  /// Entry at 1-based `position`; zero beyond the stored range.
  std::uint32_t entry(std::size_t position) const noexcept;

  /// Sum of all entries.
  std::uint64_t degree() const noexcept { return degree_; }

  bool is_empty() const noexcept { return entries_.empty(); }

  /// Largest position with a nonzero entry; 0 for the empty index.
  std::size_t max_position() const noexcept { return entries_.size(); }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.entries_ == b.entries_;
  }

  /// Strict weak order: degree first, then lexicographic on the entries.
  /// This is the canonical term ordering used for iteration and text output.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.entries_ < b.entries_;
  }

  /// Compact display form, e.g. "(2,0,1)" or "()".
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> entries_;
  std::uint64_t degree_ = 0;
};

/// Exact product of entry factorials. Throws std::overflow_error when the
/// result exceeds the 64-bit range; it never wraps.
std::uint64_t factorial(const MultiIndex& alpha);

/// The weight prod_j (2j)^(q * alpha_j) over the support of alpha.
/// Floating underflow/overflow is returned as 0 / +inf, not trapped.
double weight_2n(const MultiIndex& alpha, double q);

/// Componentwise sum.
MultiIndex add(const MultiIndex& a, const MultiIndex& b);

/// Decrement position `k` (1-based) by one. Throws std::domain_error when
/// alpha_k is zero.
MultiIndex subtract_unit(const MultiIndex& alpha, std::size_t k);

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) { return add(a, b); }

/// The j-th d-dimensional multi-index (all components >= 1) in the fixed
/// ordering: total degree ascending, ties broken lexicographically
/// ascending. j is 1-based; the map is a bijection onto N^d and stable
/// across runs.
std::vector<std::uint32_t> enumerate_basis(std::size_t d, std::uint64_t j);

/// First `count` entries of the enumerate_basis ordering, cheaper than
/// repeated unranking.
std::vector<std::vector<std::uint32_t>> basis_table(std::size_t d, std::uint64_t count);

}  // namespace wnoise

#endif  // WNOISE_MULTI_INDEX_HPP
