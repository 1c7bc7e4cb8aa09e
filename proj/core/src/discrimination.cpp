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

#include "pseudoq/discrimination.hpp"

#include <algorithm>
#include <cmath>

#include "pseudoq/rng.hpp"

namespace pseudoq {

using linalg::apply;
using linalg::inner;
using linalg::kron;
using linalg::normalized;

namespace {

void check_spec(const DiscrimSpec& spec) {
  if (!(spec.p1 >= 0 && spec.p1 <= 1 && spec.p2 >= 0 && spec.p2 <= 1))
    throw std::invalid_argument("discrimination: priors must lie in [0,1]");
  if (std::abs(spec.p1 + spec.p2 - 1.0) > 1e-12)
    throw std::invalid_argument("discrimination: priors must sum to 1");
  if (!(spec.overlap >= 0 && spec.overlap <= 1))
    throw std::invalid_argument("discrimination: overlap must lie in [0,1]");
  if (spec.copies < 1) throw std::invalid_argument("discrimination: copies must be >= 1");
}

}  // namespace

double helstrom_error(const DiscrimSpec& spec) {
  check_spec(spec);
  const double s2n = std::pow(spec.overlap, 2.0 * spec.copies);
  const double under = std::max(0.0, 1.0 - 4.0 * spec.p1 * spec.p2 * s2n);
  return 0.5 * (1.0 - std::sqrt(under));
}

double helstrom_error_pair(double theta, double p1) {
  check_theta(theta);
  return helstrom_error({p1, 1.0 - p1, std::abs(std::tanh(theta)), 1});
}

double helstrom_error_ncopy(double theta, double p1, int n) {
  check_theta(theta);
  return helstrom_error({p1, 1.0 - p1, std::abs(std::tanh(theta)), n});
}

MeasurementProbs optimal_measurement(double p1, double overlap) {
  const double p2 = 1.0 - p1;
  const double s = overlap;
  const double r = std::sqrt(std::max(0.0, 1.0 - s * s));

  // span coordinates: psi1 = (1, 0), psi2 = (s, r)
  // Lambda = p1 psi1 psi1^T - p2 psi2 psi2^T, real symmetric [[A,B],[B,C]]
  const double A = p1 - p2 * s * s;
  const double B = -p2 * s * r;
  const double C = -p2 * r * r;

  double vals[2];
  double vecs[2][2];  // vecs[k] is the unit eigenvector of vals[k]
  if (B == 0.0) {
    vals[0] = A;
    vals[1] = C;
    vecs[0][0] = 1;
    vecs[0][1] = 0;
    vecs[1][0] = 0;
    vecs[1][1] = 1;
  } else {
    const double tr = A + C;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * (A * C - B * B)));
    vals[0] = 0.5 * (tr + disc);
    vals[1] = 0.5 * (tr - disc);
    for (int k = 0; k < 2; ++k) {
      double vx = B, vy = vals[k] - A;
      const double nrm = std::hypot(vx, vy);
      vecs[k][0] = vx / nrm;
      vecs[k][1] = vy / nrm;
    }
  }

  // projector onto the strictly positive eigenspace
  double proj[2][2] = {{0, 0}, {0, 0}};
  for (int k = 0; k < 2; ++k) {
    if (vals[k] > 0) {
      proj[0][0] += vecs[k][0] * vecs[k][0];
      proj[0][1] += vecs[k][0] * vecs[k][1];
      proj[1][0] += vecs[k][1] * vecs[k][0];
      proj[1][1] += vecs[k][1] * vecs[k][1];
    }
  }
  MeasurementProbs out;
  out.q1 = proj[0][0];
  out.q2 = s * (proj[0][0] * s + proj[0][1] * r) + r * (proj[1][0] * s + proj[1][1] * r);
  out.q1 = std::clamp(out.q1, 0.0, 1.0);
  out.q2 = std::clamp(out.q2, 0.0, 1.0);
  return out;
}

Ket cloned_copies(double theta, int which, int n) {
  if (which != 1 && which != 2) throw std::invalid_argument("cloned_copies: which must be 1 or 2");
  if (n < 1 || n > 3)
    throw DimensionError("cloned_copies: exact product simulation is capped at n = 3");
  const StatePair pair = state_pair(theta);
  const MachineOp clone = cloning_operator(theta);
  Ket state = (which == 1) ? pair.alpha1 : pair.alpha2;
  for (int k = 2; k <= n; ++k) {
    state = kron(state, blank_state());
    const CMat full = kron(CMat::identity(std::size_t{1} << (k - 2)), clone.op);
    state = normalized(apply(full, state));
  }
  return state;
}

DiscrimSimResult simulate_discrimination(double theta, double p1, int n,
                                         std::uint64_t trials, std::uint64_t seed) {
  check_theta(theta);
  if (!(p1 >= 0 && p1 <= 1)) throw std::invalid_argument("simulate_discrimination: p1 in [0,1]");
  if (n < 1) throw std::invalid_argument("simulate_discrimination: n >= 1");
  if (trials < 1) throw std::invalid_argument("simulate_discrimination: trials >= 1");

  double overlap;
  if (n <= 3) {
    // grow the actual registers with the cloning machine and read the
    // overlap off the constructed states
    overlap = std::abs(inner(cloned_copies(theta, 1, n), cloned_copies(theta, 2, n)));
  } else {
    overlap = std::pow(std::abs(std::tanh(theta)), n);
  }
  overlap = std::clamp(overlap, 0.0, 1.0);

  const MeasurementProbs m = optimal_measurement(p1, overlap);
  const SplitMix64 rng(seed);

  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const bool is_state1 = rng.uniform_at(2 * t) < p1;
    const double guess1_prob = is_state1 ? m.q1 : m.q2;
    const bool guessed1 = rng.uniform_at(2 * t + 1) < guess1_prob;
    if (guessed1 != is_state1) ++errors;
  }

  DiscrimSimResult out;
  out.trials = trials;
  out.errors = errors;
  out.empirical_error = static_cast<double>(errors) / static_cast<double>(trials);
  out.analytic_error = helstrom_error({p1, 1.0 - p1, overlap, 1});
  return out;
}

}  // namespace pseudoq
