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

#include "pseudoq/machines.hpp"

namespace pseudoq {

/// Two-hypothesis discrimination instance: priors, overlap magnitude of the
/// two pure states, and how many identical copies the measurement sees.
struct DiscrimSpec {
  double p1 = 0.5;
  double p2 = 0.5;
  double overlap = 0;  // |<psi1|psi2>|, in [0, 1]
  int copies = 1;
};

/// Minimum achievable error probability for one measurement on `copies`
/// copies: (1 - sqrt(1 - 4 p1 p2 |overlap|^{2N})) / 2.
double helstrom_error(const DiscrimSpec& spec);

/// Specialization to the designated pair, overlap = |tanh theta|.
double helstrom_error_pair(double theta, double p1);

/// N-copy bound for the pair; strictly decreasing in n, -> 0 as n grows.
double helstrom_error_ncopy(double theta, double p1, int n);

/// P(guess = state 1 | true state is 1) and P(guess = 1 | true state is 2)
/// for the optimal two-outcome measurement: the projector onto the positive
/// eigenspace of p1 rho1 - p2 rho2, computed in the 2-dimensional span of
/// the hypotheses.
struct MeasurementProbs {
  double q1 = 1;
  double q2 = 0;
};
MeasurementProbs optimal_measurement(double p1, double overlap);

/// The n-copy register grown from alpha_{which} by n-1 cloning-machine
/// applications (normalizing after each); exact product-state simulation,
/// so n <= 3 keeps the dimension at most 8.
Ket cloned_copies(double theta, int which, int n);

struct DiscrimSimResult {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double empirical_error = 0;
  double analytic_error = 0;
};

/// Monte Carlo of the full protocol: sample the label with priors (p1, p2),
/// grow n copies with the cloning machine (exactly for n <= 3; through the
/// 2-dimensional span overlap tanh^n theta beyond that), measure optimally,
/// count errors. Deterministic for a fixed seed, trial order irrelevant.
DiscrimSimResult simulate_discrimination(double theta, double p1, int n,
                                         std::uint64_t trials, std::uint64_t seed);

}  // namespace pseudoq
