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

#ifndef WNOISE_FORMAT_HPP
#define WNOISE_FORMAT_HPP

#include <cstdio>
#include <string>

namespace wnoise {

/// Shortest-faithful decimal form with 17 significant digits; strtod of the
/// result reproduces the exact double, which is what the text interfaces
/// rely on for lossless round trips.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace wnoise

#endif  // WNOISE_FORMAT_HPP
