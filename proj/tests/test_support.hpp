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

#include <cmath>
#include <cstdint>

#include "pseudoq/linalg.hpp"
#include "pseudoq/rng.hpp"

namespace pseudoq::testing {

using linalg::CMat;
using linalg::Complex;
using linalg::Ket;

// Seeded N(0,1) stream via Box-Muller over the counter-based generator.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    const double u1 = 1.0 - rng_.uniform_at(counter_++);  // (0, 1]
    const double u2 = rng_.uniform_at(counter_++);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex next_complex() {
    const double re = next();
    const double im = next();
    return {re, im};
  }

 private:
  SplitMix64 rng_;
  std::uint64_t counter_ = 0;
};

inline CMat random_gaussian(std::size_t n, std::uint64_t seed) {
  GaussianStream g(seed);
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g.next_complex();
  return m;
}

inline CMat random_hermitian(std::size_t n, std::uint64_t seed) {
  const CMat a = random_gaussian(n, seed);
  return linalg::scale(Complex(0.5, 0), linalg::add(a, linalg::adjoint(a)));
}

// Haar-like random unitary, built the way the library itself evolves states:
// exp(-i H) of a random Hermitian H.
inline CMat random_unitary(std::size_t n, std::uint64_t seed) {
  return linalg::expm(linalg::scale(Complex(0, -1), random_hermitian(n, seed)));
}

inline double unitarity_residual(const CMat& u) {
  return linalg::max_abs_diff(linalg::matmul(linalg::adjoint(u), u),
                              CMat::identity(u.rows()));
}

inline Ket random_state(std::size_t dim, std::uint64_t seed) {
  GaussianStream g(seed);
  Ket v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = g.next_complex();
  return linalg::normalized(v);
}

}  // namespace pseudoq::testing
