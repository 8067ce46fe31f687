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

#ifndef WNOISE_PARALLEL_HPP
#define WNOISE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace wnoise {

/// Deterministic chunked reduction over the index range [0, total).
///
/// `map(begin, end)` is evaluated over fixed-size chunks, possibly on several
/// threads, and `combine(acc, chunk_result)` folds the per-chunk results in
/// ascending chunk order. Because chunk boundaries depend only on
/// `chunk_size`, the result is bit-identical for any thread count.
template <class Result, class Map, class Combine>
Result chunked_reduce(std::uint64_t total, std::uint64_t chunk_size, Map map,
                      Result init, Combine combine) {
  if (total == 0) return init;
  if (chunk_size == 0) chunk_size = 1;
  const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (nchunks < 2 || workers < 2) {
    Result acc = std::move(init);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      acc = combine(std::move(acc), map(begin, end));
    }
    return acc;
  }

  std::vector<Result> partial(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      partial[c] = map(begin, end);
    }
  };
  std::vector<std::thread> pool;
  const unsigned nthreads = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, nchunks));
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Result acc = std::move(init);
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    acc = combine(std::move(acc), std::move(partial[c]));
  }
  return acc;
}

/// Sum / sum-of-squares accumulator for Monte Carlo statistics.
struct MomentSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  MomentSums& merge(const MomentSums& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    count += o.count;
    return *this;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double variance() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    return (sum_sq - sum * sum / n) / (n - 1.0);
  }
  /// Standard error of the mean.
  double std_error() const {
    if (count < 2) return 0.0;
    const double v = variance();
    return v > 0.0 ? std::sqrt(v / static_cast<double>(count)) : 0.0;
  }
};

}  // namespace wnoise

#endif  // WNOISE_PARALLEL_HPP
