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

#ifndef WNOISE_RNG_HPP
#define WNOISE_RNG_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace wnoise {

/// Generator identifier recorded in output metadata.
inline constexpr std::string_view kGeneratorName = "philox4x64-10+as241";

/// Philox 4x64, 10 rounds: a counter-based generator. Every output block is
/// a pure function of (seed, stream, counter), so draws are addressable like
/// array elements and Monte Carlo paths can run on any number of threads
/// without shared state.
std::array<std::uint64_t, 4> philox4x64(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t counter);

/// Uniform draw in the open interval (0, 1) with 53 significant bits,
/// derived from the k-th 64-bit word of the (seed, stream) Philox sequence.
double uniform_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k);

/// Inverse of the standard normal CDF via the AS 241 double-precision
/// rational approximation (PPND16). Relative error below 1e-15 on (0, 1);
/// uses only +,-,*,/ ,sqrt and log so results are reproducible wherever
/// those primitives are correctly rounded.
double inverse_normal_cdf(double p);

/// The k-th standard normal draw of the (seed, stream) sequence:
/// inverse_normal_cdf applied to uniform_draw.
double normal_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k);

/// Sequential reader over normal_draw that amortizes Philox block calls.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  double next();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  std::array<std::uint64_t, 4> block_{};
};

}  // namespace wnoise

#endif  // WNOISE_RNG_HPP
