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

#include "wnoise/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace wnoise {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ULL;  // golden ratio
constexpr std::uint64_t kPhiloxW1 = 0xBB67AE8584CAA73BULL;  // sqrt(3) - 1

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t counter) {
  std::array<std::uint64_t, 4> ctr{counter, 0, 0, 0};
  std::uint64_t k0 = seed;
  std::uint64_t k1 = stream;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k0 += kPhiloxW0;
      k1 += kPhiloxW1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kPhiloxM0, ctr[0], hi0, lo0);
    mul_hi_lo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
  }
  return ctr;
}

double uniform_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
  const auto block = philox4x64(seed, stream, k >> 2);
  const std::uint64_t word = block[k & 3];
  // Top 53 bits, centered on the half-grid so 0 and 1 are unreachable.
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("inverse_normal_cdf: p must lie in (0, 1)");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
              6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
            1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
          1.3314166789178437745e2) * r + 3.3871328727963666080e0);
    const double den =
        (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
              3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
            5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
          4.2313330701600911252e1) * r + 1.0);
    return q * num / den;
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    value = num / den;
  }
  return q < 0.0 ? -value : value;
}

double normal_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
  return inverse_normal_cdf(uniform_draw(seed, stream, k));
}

double NormalStream::next() {
  if ((index_ & 3) == 0) {
    block_ = philox4x64(seed_, stream_, index_ >> 2);
  }
  const std::uint64_t word = block_[index_ & 3];
  ++index_;
  return inverse_normal_cdf((static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53);
}

}  // namespace wnoise
