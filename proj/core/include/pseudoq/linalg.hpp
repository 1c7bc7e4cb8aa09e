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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pseudoq/exceptions.hpp"

namespace pseudoq::linalg {

using Complex = std::complex<double>;

/// Largest matrix edge the dense kernels accept. Everything in this library
/// lives in 2, 4 or 8 dimensions; the solvers are written for that regime
/// (robustness over asymptotics) and refuse anything bigger.
inline constexpr std::size_t kMaxDim = 8;

/// Dense complex matrix, row-major. The single carrier for every operator
/// in the library: Hamiltonians, metrics, Paulis, evolution operators,
/// dilations.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);  // zero-filled
  CMat(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  CMat(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMat identity(std::size_t n);
  static CMat diag(const std::vector<Complex>& entries);
  static CMat diag_real(const std::vector<double>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Complex state vector of dimension 2, 4 or 8 (qubit registers); general
/// dims up to 8 are tolerated so eigenvector results fit the same type.
struct Ket {
  std::vector<Complex> amp;

  Ket() = default;
  explicit Ket(std::size_t dim) : amp(dim) {}
  Ket(std::initializer_list<Complex> amps) : amp(amps) {}

  std::size_t dim() const { return amp.size(); }
  Complex& operator[](std::size_t i) { return amp[i]; }
  const Complex& operator[](std::size_t i) const { return amp[i]; }
};

struct EigPair {
  Complex value;
  Ket vector;
};

/// a = left * diag(singulars) * right^dagger, singulars descending >= 0.
struct SvdResult {
  CMat left;
  std::vector<double> singulars;
  CMat right;
};

// -- arithmetic ------------------------------------------------------------

CMat kron(const CMat& a, const CMat& b);
Ket kron(const Ket& u, const Ket& v);
CMat matmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
Ket apply(const CMat& a, const Ket& v);
CMat add(const CMat& a, const CMat& b);
CMat sub(const CMat& a, const CMat& b);
CMat scale(Complex s, const CMat& a);

inline CMat operator*(const CMat& a, const CMat& b) { return matmul(a, b); }
inline Ket operator*(const CMat& a, const Ket& v) { return apply(a, v); }
inline CMat operator*(Complex s, const CMat& a) { return scale(s, a); }
inline CMat operator*(double s, const CMat& a) { return scale(Complex(s, 0), a); }
inline CMat operator+(const CMat& a, const CMat& b) { return add(a, b); }
inline CMat operator-(const CMat& a, const CMat& b) { return sub(a, b); }

Ket add(const Ket& u, const Ket& v);
Ket scale(Complex s, const Ket& u);
inline Ket operator+(const Ket& u, const Ket& v) { return add(u, v); }
inline Ket operator*(Complex s, const Ket& u) { return scale(s, u); }

// -- vector geometry ---------------------------------------------------------

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Ket& u, const Ket& v);
double norm(const Ket& u);
Ket normalized(const Ket& u);  // throws NumericalError on (near-)zero input

/// |<u/|u|, v/|v|>|: 1 iff the states are equal up to a global complex
/// scalar. The gauge-invariant "proportional to" test used throughout.
double collinearity(const Ket& u, const Ket& v);

// -- matrix norms / predicates ----------------------------------------------

double max_abs(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);

// -- dense solvers ------------------------------------------------------------

/// Inverse via LU with partial pivoting; throws NumericalError when singular
/// to working precision.
CMat inverse(const CMat& a);

/// Right eigenpairs of a general complex square matrix (dim <= 8), via
/// Householder Hessenberg reduction and shifted QR to Schur form, with
/// eigenvectors by triangular back-substitution. Eigenvalues ordered by
/// descending real part, ties by descending imaginary part. Always returns
/// dim pairs; for defective inputs the repeated directions betray themselves
/// through the residual (and through a singular eigenvector matrix).
std::vector<EigPair> eig_general(const CMat& a);

/// One-sided Jacobi SVD (dim <= 8). left/right unitary to ~1e-15, singular
/// values descending.
SvdResult svd(const CMat& a);

/// e^a. Primary path diagonalizes a and exponentiates the spectrum; when the
/// eigenbasis is singular or too ill-conditioned to reproduce a, falls back
/// to scaling-and-squaring. Both paths are exposed separately so they can be
/// played against each other.
CMat expm(const CMat& a);
CMat expm_eigen(const CMat& a);   // throws NumericalError if no usable eigenbasis
CMat expm_series(const CMat& a);  // scaling-and-squaring, scaled 1-norm < 0.5

}  // namespace pseudoq::linalg
