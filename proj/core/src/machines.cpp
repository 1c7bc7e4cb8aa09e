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

#include "pseudoq/machines.hpp"

#include <cmath>

namespace pseudoq {

using linalg::add;
using linalg::adjoint;
using linalg::apply;
using linalg::inner;
using linalg::kron;
using linalg::matmul;
using linalg::max_abs_diff;
using linalg::norm;
using linalg::normalized;
using linalg::scale;
using linalg::sub;

StatePair state_pair(double theta) {
  check_theta(theta);
  const double inv = 1.0 / std::sqrt(std::cosh(theta));
  const double ch = std::cosh(theta / 2), sh = std::sinh(theta / 2);
  return {Ket{inv * ch, inv * sh}, Ket{inv * sh, inv * ch}, theta};
}

Ket blank_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return Ket{r, r};
}

namespace {

// Both machines share the template
//   (a sz - i b sy) (x) (-1 + sx + f (sz -+ i sy)) + 1 (x) (1 + sx + g (sz +- i sy))
// over 2*sqrt(2); they differ only in which of (a+b), (a-b) multiplies which
// side and in the sign pattern of the sy terms.
CMat machine_matrix(double a, double b, double f_left, double g_right, double sy_sign_left) {
  const CMat id = identity2();
  const CMat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const Complex i(0, 1);

  const CMat left = sub(scale(a, sz), scale(i * b, sy));
  CMat t1 = sub(sx, id);
  t1 = add(t1, scale(f_left, add(sz, scale(sy_sign_left * i, sy))));
  CMat t2 = add(id, sx);
  t2 = add(t2, scale(g_right, add(sz, scale(-sy_sign_left * i, sy))));

  const double pref = 1.0 / (2.0 * std::sqrt(2.0));
  return scale(pref, add(kron(left, t1), kron(id, t2)));
}

}  // namespace

MachineOp deleting_operator(double theta) {
  check_theta(theta);
  const double a = std::cosh(theta), b = std::sinh(theta);
  // (a+b)(sz - i sy) on the left factor's partner, (a-b)(sz + i sy) on the rest
  return {machine_matrix(a, b, a + b, a - b, -1.0), MachineKind::kDelete, theta,
          std::acos(-1.0) / 2};
}

MachineOp cloning_operator(double theta) {
  check_theta(theta);
  const double a = std::cosh(theta), b = std::sinh(theta);
  return {machine_matrix(a, b, a - b, a + b, +1.0), MachineKind::kClone, theta,
          std::acos(-1.0) / 2};
}

CMat conjugated_machine(const MachineOp& machine, const CMat& v) {
  if (v.rows() != 2 || v.cols() != 2)
    throw DimensionError("conjugated_machine: v must be 2x2");
  if (max_abs_diff(matmul(adjoint(v), v), CMat::identity(2)) > 1e-10)
    throw std::invalid_argument("conjugated_machine: v is not unitary");
  const CMat vv = kron(v, v);
  const CMat vvd = kron(adjoint(v), adjoint(v));
  return matmul(vvd, matmul(machine.op, vv));
}

std::pair<double, CMat> fit_theta_and_frame(const Ket& psi1, const Ket& psi2) {
  if (psi1.dim() != 2 || psi2.dim() != 2)
    throw DimensionError("fit_theta_and_frame: qubit states required");
  const Ket p1 = normalized(psi1);
  Ket p2 = normalized(psi2);

  Complex ov = inner(p1, p2);
  const double mag = std::abs(ov);
  if (mag >= 1.0 - 1e-12)
    throw RangeError("fit_theta_and_frame: states are identical, no finite theta");
  // phase gauge: make the overlap real and nonnegative
  if (mag > 0) p2 = scale(std::conj(ov) / mag, p2);

  const double theta = std::atanh(mag);
  const StatePair target = state_pair(theta);

  // Gram-Schmidt second vectors on both sides; the expansion coefficients
  // (mag, sqrt(1-mag^2)) coincide by construction, so matching the frames
  // maps psi_i exactly onto alpha_i.
  Ket e2 = add(p2, scale(Complex(-mag, 0), p1));
  Ket f2 = add(target.alpha2, scale(Complex(-mag, 0), target.alpha1));
  e2 = normalized(e2);
  f2 = normalized(f2);

  CMat v(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      v(i, j) = target.alpha1[i] * std::conj(p1[j]) + f2[i] * std::conj(e2[j]);
  return {theta, v};
}

Complex proportionality_constant(const Ket& out, const Ket& target) {
  const Complex t2 = inner(target, target);
  if (std::abs(t2) == 0) throw NumericalError("proportionality_constant: zero target");
  return inner(target, out) / t2;
}

}  // namespace pseudoq
