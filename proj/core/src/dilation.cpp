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

#include "pseudoq/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "pseudoq/rng.hpp"

namespace pseudoq {

using linalg::add;
using linalg::adjoint;
using linalg::apply;
using linalg::kron;
using linalg::matmul;
using linalg::norm;
using linalg::normalized;
using linalg::scale;
using linalg::sub;
using linalg::SvdResult;

DilationResult dilate(const CMat& op) {
  if (op.rows() != 4 || op.cols() != 4) throw DimensionError("dilate: op must be 4x4");

  const SvdResult s = linalg::svd(op);
  DilationResult out;
  out.lambda_max = s.singulars[0];
  out.branch = (out.lambda_max > 1.0 + 1e-12) ? DilationBranch::kScaled
                                              : DilationBranch::kUnscaled;

  std::vector<double> lam_prime(4);
  if (out.branch == DilationBranch::kScaled) {
    out.u_tilde = scale(1.0 / out.lambda_max, op);
    for (int i = 0; i < 4; ++i) {
      const double ratio = s.singulars[i] / out.lambda_max;
      lam_prime[i] = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    }
  } else {
    out.u_tilde = op;
    for (int i = 0; i < 4; ++i)
      lam_prime[i] = std::sqrt(std::max(0.0, 1.0 - s.singulars[i] * s.singulars[i]));
  }
  out.v_comp = matmul(s.left, matmul(CMat::diag_real(lam_prime), adjoint(s.right)));

  const CMat p00{{1, 0}, {0, 0}};
  const CMat p01{{0, 1}, {0, 0}};
  const CMat p10{{0, 0}, {1, 0}};
  const CMat p11{{0, 0}, {0, 1}};
  out.u_tot = add(sub(add(kron(out.u_tilde, p00), kron(out.v_comp, p10)),
                      kron(out.v_comp, p01)),
                  kron(out.u_tilde, p11));
  return out;
}

PostSelectOutcome post_select(const DilationResult& d, const Ket& psi, AncillaOutcome outcome) {
  if (psi.dim() != 4) throw DimensionError("post_select: psi must have dimension 4");
  if (std::abs(norm(psi) - 1.0) > 1e-10)
    throw std::invalid_argument("post_select: psi must be normalized");

  const CMat& block = (outcome == AncillaOutcome::kKeep0) ? d.u_tilde : d.v_comp;
  const Ket branch_state = apply(block, psi);
  const double p = norm(branch_state) * norm(branch_state);

  PostSelectOutcome out;
  out.success = (outcome == AncillaOutcome::kKeep0);
  out.probability = std::clamp(p, 0.0, 1.0);
  if (p < 1e-14)
    throw NumericalError("post_select: branch probability vanishes, state undefined");
  out.out_state = normalized(branch_state);
  return out;
}

double success_probability(const DilationResult& d, const Ket& psi) {
  if (psi.dim() != 4) throw DimensionError("success_probability: psi must have dimension 4");
  const double n = norm(apply(d.u_tilde, psi));
  return std::clamp(n * n, 0.0, 1.0);
}

SampleStats sample_post_selection(const DilationResult& d, const Ket& psi,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("sample_post_selection: trials >= 1");
  const double p = success_probability(d, psi);
  const SplitMix64 rng(seed);

  SampleStats out;
  out.trials = trials;
  out.analytic_p = p;
  for (std::uint64_t t = 0; t < trials; ++t)
    if (rng.uniform_at(t) < p) ++out.successes;
  out.empirical_p = static_cast<double>(out.successes) / static_cast<double>(trials);
  return out;
}

}  // namespace pseudoq
