// Copyright 2026 The pseudoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace pseudoq {

/// Conflicting or unsupported matrix/vector dimensions.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside its supported range (e.g. |theta| above the cap).
struct RangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An iterative algorithm failed to converge, a matrix is singular to
/// working precision, or a requested result is numerically undefined.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pseudoq
