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

#include <cstdint>

namespace pseudoq {

/// Counter-based generator (splitmix64 stream evaluated by index).
///
/// Output word n depends only on (seed, n), so trials can be drawn in any
/// order or in parallel and still reproduce bit-for-bit for a fixed seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word_at(std::uint64_t n) const {
    std::uint64_t z = seed_ + (n + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform_at(std::uint64_t n) const {
    return static_cast<double>(word_at(n) >> 11) * 0x1.0p-53;
  }

  /// Derives an independent seed, for sub-streams.
  std::uint64_t split(std::uint64_t stream) const { return word_at(~stream); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace pseudoq
