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

#ifndef WNOISE_ERRORS_HPP
#define WNOISE_ERRORS_HPP

#include <stdexcept>

namespace wnoise {

/// Raised when an iterative numerical procedure cannot reach its accuracy
/// target (quadrature refinement exhausted, series failing to settle).
/// Contract violations use std::domain_error / std::invalid_argument and
/// integer range failures use std::overflow_error.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wnoise

#endif  // WNOISE_ERRORS_HPP
