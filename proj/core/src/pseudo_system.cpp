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

#include "pseudoq/pseudo_system.hpp"

#include <cmath>
#include <string>

namespace pseudoq {

using linalg::add;
using linalg::adjoint;
using linalg::inner;
using linalg::inverse;
using linalg::kron;
using linalg::matmul;
using linalg::max_abs_diff;
using linalg::scale;
using linalg::sub;

CMat pauli_x() { return CMat{{0, 1}, {1, 0}}; }
CMat pauli_y() { return CMat{{0, Complex(0, -1)}, {Complex(0, 1), 0}}; }
CMat pauli_z() { return CMat{{1, 0}, {0, -1}}; }
CMat identity2() { return CMat::identity(2); }
Ket ket0() { return Ket{1, 0}; }
Ket ket1() { return Ket{0, 1}; }

void check_theta(double theta) {
  if (!(std::abs(theta) <= kThetaCap))
    throw RangeError("theta outside supported range [-" + std::to_string(kThetaCap) + ", " +
                     std::to_string(kThetaCap) + "]");
}

PseudoSystem build_system(double theta) {
  check_theta(theta);
  PseudoSystem sys;
  sys.theta = theta;
  sys.a = std::cosh(theta);
  sys.b = std::sinh(theta);
  sys.c = Complex(sys.a, std::sqrt(2.0) * sys.b);
  sys.d = Complex(std::sqrt(2.0) * sys.a, -sys.b);

  const double s2 = std::sqrt(2.0);
  const CMat id = identity2();
  const CMat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();

  // left factor a*sigma_z - i b*sigma_y and the two one-qubit polynomials
  const CMat left = sub(scale(sys.a, sz), scale(Complex(0, sys.b), sy));
  CMat m1 = scale(2.0, id);
  m1 = sub(m1, scale(s2, sx));
  m1 = sub(m1, scale(std::conj(sys.c), sy));
  m1 = sub(m1, scale(std::conj(sys.d), sz));
  CMat m2 = scale(2.0, id);
  m2 = sub(m2, scale(s2, sx));
  m2 = add(m2, scale(sys.c, sy));
  m2 = sub(m2, scale(sys.d, sz));

  sys.h = scale(0.25, add(kron(left, m1), kron(id, m2)));
  sys.eta0 = sub(scale(sys.a, id), scale(sys.b, sx));
  sys.eta = kron(sys.eta0, sys.eta0);

  const auto pairs = linalg::eig_general(sys.h);
  for (std::size_t i = 0; i < 4; ++i) sys.eigs[i] = pairs[i];
  return sys;
}

CMat eta_inverse(const PseudoSystem& sys) {
  // (a*1 - b*sx)(a*1 + b*sx) = (a^2 - b^2)*1 = 1
  const CMat e0inv = add(scale(sys.a, identity2()), scale(sys.b, pauli_x()));
  return kron(e0inv, e0inv);
}

Complex eta_inner(const PseudoSystem& sys, const Ket& u, const Ket& v) {
  if (u.dim() != 4 || v.dim() != 4)
    throw DimensionError("eta_inner: expects 4-dimensional kets");
  return inner(u, linalg::apply(sys.eta, v));
}

Complex eta_inner_qubit(const PseudoSystem& sys, const Ket& u, const Ket& v) {
  if (u.dim() != 2 || v.dim() != 2)
    throw DimensionError("eta_inner_qubit: expects single-qubit kets");
  return inner(u, linalg::apply(sys.eta0, v));
}

bool is_pseudo_hermitian(const CMat& h, const CMat& eta, double tol) {
  if (h.rows() != h.cols() || eta.rows() != eta.cols() || h.rows() != eta.rows())
    throw DimensionError("is_pseudo_hermitian: conforming square matrices required");
  const CMat lhs = adjoint(h);
  const CMat rhs = matmul(eta, matmul(h, inverse(eta)));
  return max_abs_diff(lhs, rhs) <= tol;
}

bool is_pseudo_unitary(const CMat& u, const CMat& eta, double tol) {
  if (u.rows() != u.cols() || eta.rows() != eta.cols() || u.rows() != eta.rows())
    throw DimensionError("is_pseudo_unitary: conforming square matrices required");
  const CMat lhs = matmul(adjoint(u), matmul(eta, u));
  return max_abs_diff(lhs, eta) <= tol;
}

std::array<EigPair, 4> closed_form_eigenstates(const PseudoSystem& sys) {
  const double a = sys.a, b = sys.b;
  const double s2 = std::sqrt(2.0);
  const Complex i(0, 1);

  // Components ordered to match h's tensor convention (first factor runs the
  // slow index). The published tuples list the middle pair the other way
  // around and carry a stray b inside the parenthesis of the second entry;
  // as printed they fail h*E = lambda*E, in this form the residual is ~1e-15.
  const Ket e1 = scale(1.0 / s2, Ket{a - i * b - 1.0, i * (1.0 - a) + b,
                                     -i * (1.0 + a) + b, a - i * b + 1.0});
  const Ket e2 = scale(1.0 / s2, Ket{a + i * b - 1.0, i * (a - 1.0) + b,
                                     i * (1.0 + a) + b, a + i * b + 1.0});
  const Ket e3 = scale(1.0 / (4.0 - 2.0 * s2),
                       Ket{(1.0 - s2) * (a + 1.0) + b, a + (1.0 - s2) * b + 1.0,
                           a + (1.0 - s2) * b - 1.0, (1.0 - s2) * (a - 1.0) + b});
  const Ket e4 = scale(1.0 / (4.0 + 2.0 * s2),
                       Ket{(1.0 + s2) * (a + 1.0) + b, a + (1.0 + s2) * b + 1.0,
                           a + (1.0 + s2) * b - 1.0, (1.0 + s2) * (a - 1.0) + b});

  return {EigPair{Complex(0.5, 0), e1}, EigPair{Complex(-0.5, 0), e2},
          EigPair{Complex(2.0, 0), e3}, EigPair{Complex(0.0, 0), e4}};
}

std::array<EigPair, 4> eta_normalized_eigenstates(const PseudoSystem& sys) {
  std::array<EigPair, 4> states = closed_form_eigenstates(sys);
  for (EigPair& p : states) {
    const double n2 = eta_inner(sys, p.vector, p.vector).real();
    if (!(n2 > 0)) throw NumericalError("eta_normalized_eigenstates: nonpositive eta-norm");
    p.vector = scale(Complex(1.0 / std::sqrt(n2), 0), p.vector);
  }
  return states;
}

}  // namespace pseudoq
