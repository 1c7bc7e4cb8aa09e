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

#include "pseudoq/linalg.hpp"

namespace pseudoq {

using linalg::CMat;
using linalg::Ket;

enum class DilationBranch { kScaled, kUnscaled };

/// A 4x4 operator embedded as one block of an 8x8 unitary on system+ancilla.
///
/// u_tilde is the operator scaled into the unit ball (divided by lambda_max
/// when that exceeds 1), v_comp the complement built from the same singular
/// frame, and u_tot the total unitary
///   u_tilde (x) |0><0| + v_comp (x) |1><0| - v_comp (x) |0><1| + u_tilde (x) |1><1|
/// with the ancilla as the LAST tensor factor: basis index = 2*system + ancilla.
struct DilationResult {
  CMat u_tilde;
  CMat v_comp;
  CMat u_tot;
  double lambda_max = 0;
  DilationBranch branch = DilationBranch::kUnscaled;
};

/// Ancilla measurement outcome kept by the post-selection. keep0 is the
/// success branch (recovers the embedded operator's action).
enum class AncillaOutcome { kKeep0, kKeep1 };

struct PostSelectOutcome {
  bool success = false;
  Ket out_state;  // dim 4, normalized
  double probability = 0;
};

/// Dilates an arbitrary 4x4 operator. SVD failure propagates; lambda_max
/// within 1e-12 of 1 takes the unscaled branch (the two coincide there).
DilationResult dilate(const CMat& op);

/// Projects the evolved system+ancilla state onto the chosen ancilla
/// outcome. psi must be normalized to 1e-10. Throws NumericalError when the
/// requested branch has probability below 1e-14 (its state is undefined).
PostSelectOutcome post_select(const DilationResult& d, const Ket& psi, AncillaOutcome outcome);

/// N1 = <psi| u_tilde^dag u_tilde |psi>: probability that the ancilla reads
/// 0 and the embedded operator's action survives.
double success_probability(const DilationResult& d, const Ket& psi);

struct SampleStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double empirical_p = 0;
  double analytic_p = 0;
};

/// Bernoulli sampling of the ancilla measurement; counter-based RNG, so the
/// result is reproducible for a fixed seed and independent of trial order.
SampleStats sample_post_selection(const DilationResult& d, const Ket& psi,
                                  std::uint64_t trials, std::uint64_t seed);

}  // namespace pseudoq
