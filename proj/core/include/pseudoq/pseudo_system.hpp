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

#include <array>

#include "pseudoq/linalg.hpp"

namespace pseudoq {

using linalg::CMat;
using linalg::Complex;
using linalg::EigPair;
using linalg::Ket;

/// Range cap on the family parameter theta. cosh(5) ~ 74 keeps every matrix
/// in the family well-scaled in double precision; all the interesting
/// phenomena live well inside |theta| <= 2.
inline constexpr double kThetaCap = 5.0;

// Pauli matrices and friends.
CMat pauli_x();
CMat pauli_y();
CMat pauli_z();
CMat identity2();
Ket ket0();
Ket ket1();

/// The two-qubit pseudo-Hermitian family: Hamiltonian h(theta) with real
/// spectrum {2, 1/2, -1/2, 0}, its metric eta = eta0 (x) eta0, and the
/// hyperbolic scalars the closed forms are written in.
///
/// h is pseudo-Hermitian but not Hermitian for theta != 0: h^dag = eta h
/// eta^{-1}, and the evolution e^{-i h t} preserves the eta-inner product
/// <u|eta|v> instead of the conventional one.
struct PseudoSystem {
  double theta = 0;
  double a = 1;  // cosh(theta)
  double b = 0;  // sinh(theta)
  Complex c;     // cosh(theta) + i sqrt(2) sinh(theta)
  Complex d;     // sqrt(2) cosh(theta) - i sinh(theta)
  CMat h;        // 4x4 Hamiltonian
  CMat eta0;     // 2x2 metric factor, a*1 - b*sigma_x
  CMat eta;      // eta0 (x) eta0
  std::array<EigPair, 4> eigs;  // numerical eigenpairs of h, descending
};

/// Throws RangeError when |theta| exceeds the cap.
void check_theta(double theta);

/// Builds the system at the given theta. Throws RangeError outside the cap.
PseudoSystem build_system(double theta);

/// Closed-form inverse of the metric: eta0^{-1} = a*1 + b*sigma_x, tensored.
CMat eta_inverse(const PseudoSystem& sys);

/// <u|eta|v> for 4-dimensional kets.
Complex eta_inner(const PseudoSystem& sys, const Ket& u, const Ket& v);

/// <u|eta0|v> for single-qubit kets.
Complex eta_inner_qubit(const PseudoSystem& sys, const Ket& u, const Ket& v);

/// max |h^dag - eta h eta^{-1}| <= tol. Throws NumericalError for singular
/// eta (general eta, inverted numerically here).
bool is_pseudo_hermitian(const CMat& h, const CMat& eta, double tol);

/// max |u^dag eta u - eta| <= tol.
bool is_pseudo_unitary(const CMat& u, const CMat& eta, double tol);

/// The four closed-form right eigenstates of h, with their printed scalar
/// prefactors, ordered by the eigenvalues (1/2, -1/2, 2, 0) they belong to.
/// The prefactors do not normalize them: <E|eta|E> comes out as the
/// theta-independent constants {4, 4, 2+sqrt2, 2-sqrt2}.
std::array<EigPair, 4> closed_form_eigenstates(const PseudoSystem& sys);

/// Same states rescaled so <E_i|eta|E_i> = 1; their eta-Gram matrix is then
/// the identity.
std::array<EigPair, 4> eta_normalized_eigenstates(const PseudoSystem& sys);

}  // namespace pseudoq
