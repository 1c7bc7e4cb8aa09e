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

#include <utility>

#include "pseudoq/pseudo_system.hpp"

namespace pseudoq {

/// The designated nonorthogonal pair: conventional overlap tanh(theta),
/// eta0-orthogonal, both unit-norm.
struct StatePair {
  Ket alpha1;
  Ket alpha2;
  double theta = 0;
};

enum class MachineKind { kDelete, kClone };

/// A two-qubit machine operator: the closed-form pseudo-unitary evolution at
/// tau = pi/2 generated by -h (delete) or h (clone).
struct MachineOp {
  CMat op;  // 4x4
  MachineKind kind = MachineKind::kDelete;
  double theta = 0;
  double tau = 0;  // always pi/2 for these machines
};

StatePair state_pair(double theta);

/// (|0> + |1>)/sqrt(2): the fixed state the deleted register ends in,
/// independent of which input state was deleted.
Ket blank_state();

/// Closed-form U_del = e^{+i h pi/2}. Maps alpha_i (x) alpha_i to
/// alpha_i (x) blank, up to a scalar.
MachineOp deleting_operator(double theta);

/// Closed-form U_clone = e^{-i h pi/2}. Maps alpha_i (x) blank to
/// alpha_i (x) alpha_i, up to a scalar. Inverse of the deleting machine.
MachineOp cloning_operator(double theta);

/// (v^dag (x) v^dag) op (v (x) v): the same machine acting on the rotated
/// pair psi_i = v^dag alpha_i, with rotated blank v^dag |+>. Throws when v
/// is not unitary to 1e-10.
CMat conjugated_machine(const MachineOp& machine, const CMat& v);

/// Recovers (theta, v) for two arbitrary distinct nonorthogonal qubit states:
/// tanh(theta) = |<psi1|psi2>| and v maps psi1, psi2 onto alpha1(theta),
/// alpha2(theta) up to phases (orthonormal-frame matching after fixing the
/// overlap's phase gauge). Orthogonal inputs land on theta = 0; identical
/// inputs have no finite theta and throw RangeError.
std::pair<double, CMat> fit_theta_and_frame(const Ket& psi1, const Ket& psi2);

/// The scalar k with out ~= k * target (least squares); reported alongside
/// collinearity since the machines fix their targets only up to this factor.
Complex proportionality_constant(const Ket& out, const Ket& target);

}  // namespace pseudoq
