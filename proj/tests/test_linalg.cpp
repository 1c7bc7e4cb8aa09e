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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "pseudoq/linalg.hpp"
#include "pseudoq/machines.hpp"
#include "pseudoq/pseudo_system.hpp"
#include "test_support.hpp"

using namespace pseudoq;
using namespace pseudoq::linalg;
using pseudoq::testing::random_gaussian;
using pseudoq::testing::random_hermitian;
using pseudoq::testing::random_unitary;
using pseudoq::testing::unitarity_residual;

namespace {

double reconstruction_residual(const CMat& a, const SvdResult& s) {
  return max_abs_diff(matmul(s.left, matmul(CMat::diag_real(s.singulars), adjoint(s.right))), a);
}

}  // namespace

TEST_CASE("CMat construction enforces shape and finiteness") {
  CHECK_THROWS_AS(CMat({{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(CMat(2, 2, {1, 2, 3}), DimensionError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(CMat({{1, 2}, {3, inf}}), std::invalid_argument);
  CHECK(CMat::identity(4).all_finite());
}

TEST_CASE("kron: identity and Pauli block structure") {
  CHECK(max_abs_diff(kron(identity2(), identity2()), CMat::identity(4)) == 0.0);

  // sigma_z (x) sigma_x has blocks [[sx, 0], [0, -sx]]
  const CMat k = kron(pauli_z(), pauli_x());
  const CMat sx = pauli_x();
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(k(r, c) == sx(r, c));
      CHECK(k(2 + r, 2 + c) == -sx(r, c));
      CHECK(k(r, 2 + c) == Complex{});
      CHECK(k(2 + r, c) == Complex{});
    }
}

TEST_CASE("kron: eta0 tensor square matches a direct scalar expansion") {
  // independent oracle: expand (a*1 - b*sx)^{(x)2} entry by entry with plain
  // scalar loops, no library calls
  const double a = std::cosh(1.0), b = std::sinh(1.0);
  const double e0[2][2] = {{a, -b}, {-b, a}};
  const PseudoSystem sys = build_system(1.0);
  const CMat k = kron(sys.eta0, sys.eta0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const double expect = e0[i][j] * e0[r][c];
          CHECK(std::abs(k(2 * i + r, 2 * j + c) - expect) <= 1e-15);
          CHECK(std::abs(sys.eta(2 * i + r, 2 * j + c) - expect) <= 1e-15);
        }
}

TEST_CASE("kron: associative and bilinear on random matrices") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const CMat a = random_gaussian(2, seed);
    const CMat b = random_gaussian(2, seed + 100);
    const CMat c = random_gaussian(2, seed + 200);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
    CHECK(max_abs_diff(kron(add(a, b), c), add(kron(a, c), kron(b, c))) <= 1e-12);
    const Complex s(0.7, -1.3);
    CHECK(max_abs_diff(kron(scale(s, a), b), scale(s, kron(a, b))) <= 1e-12);
  }
}

TEST_CASE("matmul/adjoint/apply basics") {
  const CMat a = random_gaussian(4, 42);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
  CHECK(max_abs_diff(matmul(CMat::identity(4), a), a) == 0.0);
  CHECK(collinearity(apply(pauli_x(), ket0()), ket1()) == doctest::Approx(1.0));

  CHECK_THROWS_AS(matmul(CMat(2, 3), CMat(2, 3)), DimensionError);
  CHECK_THROWS_AS(apply(CMat::identity(4), ket0()), DimensionError);
  CHECK_THROWS_AS(add(CMat(2, 2), CMat(4, 4)), DimensionError);
}

TEST_CASE("eig_general: diagonal input reproduces the diagonal") {
  const auto pairs = eig_general(CMat::diag_real({2.0, 0.5, -0.5, 0.0}));
  REQUIRE(pairs.size() == 4);
  // descending real part
  CHECK(pairs[0].value.real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pairs[1].value.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(pairs[2].value) <= 1e-12);
  CHECK(pairs[3].value.real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("eig_general: spectrum of the two-qubit Hamiltonian") {
  const auto pairs = eig_general(build_system(0.5).h);
  const double expected[4] = {2.0, 0.5, 0.0, -0.5};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(pairs[i].value.real() - expected[i]) <= 1e-9);
    CHECK(std::abs(pairs[i].value.imag()) <= 1e-9);
  }
}

TEST_CASE("eig_general: sigma_x eigenpairs") {
  const auto pairs = eig_general(pauli_x());
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].value.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pairs[1].value.real() == doctest::Approx(-1.0).epsilon(1e-12));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(collinearity(pairs[0].vector, Ket{r, r}) >= 1.0 - 1e-12);
  CHECK(collinearity(pairs[1].vector, Ket{r, -r}) >= 1.0 - 1e-12);
}

TEST_CASE("eig_general: residual bound on random matrices") {
  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 7;  // 2..8
    const CMat a = random_gaussian(n, seed);
    const double anorm = max_abs(a);
    for (const EigPair& p : eig_general(a)) {
      Ket resid = add(apply(a, p.vector), scale(-p.value, p.vector));
      CHECK(norm(resid) <= 1e-9 * anorm);
    }
  }
}

TEST_CASE("eig_general rejects oversized and non-square input") {
  CHECK_THROWS_AS(eig_general(CMat(9, 9)), DimensionError);
  CHECK_THROWS_AS(eig_general(CMat(2, 3)), DimensionError);
}

TEST_CASE("svd: identity and diagonal") {
  const SvdResult s4 = svd(CMat::identity(4));
  for (double sv : s4.singulars) CHECK(sv == doctest::Approx(1.0).epsilon(1e-12));

  const SvdResult s = svd(CMat::diag_real({3.0, 0.0}));
  CHECK(s.singulars[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.singulars[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(unitarity_residual(s.left) <= 1e-10);
  CHECK(unitarity_residual(s.right) <= 1e-10);
  CHECK(reconstruction_residual(CMat::diag_real({3.0, 0.0}), s) <= 1e-9);
}

TEST_CASE("svd: cloning operator singular values match the eigen route") {
  // oracle: singular values are the square roots of the eigenvalues of
  // U^dag U, computed independently through eig_general
  const CMat u = cloning_operator(1.0).op;
  const SvdResult s = svd(u);
  const auto pairs = eig_general(matmul(adjoint(u), u));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(pairs[i].value.imag()) <= 1e-9);
    CHECK(std::abs(std::sqrt(pairs[i].value.real()) - s.singulars[i]) <= 1e-9);
  }
  // largest singular value is what the dilation scales by
  CHECK(s.singulars[0] >= s.singulars[1]);
  CHECK(s.singulars[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("svd: random unitaries have unit spectrum") {
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    const SvdResult s = svd(random_unitary(4, seed));
    for (double sv : s.singulars) CHECK(std::abs(sv - 1.0) <= 1e-9);
  }
}

TEST_CASE("svd: reconstruction and unitarity on random and degenerate input") {
  for (std::uint64_t seed = 60; seed < 72; ++seed) {
    const std::size_t n = 2 + seed % 7;
    CMat a = random_gaussian(n, seed);
    if (seed % 3 == 0) {  // knock out a column to force rank deficiency
      for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = 0;
    }
    const SvdResult s = svd(a);
    CHECK(unitarity_residual(s.left) <= 1e-10);
    CHECK(unitarity_residual(s.right) <= 1e-10);
    CHECK(reconstruction_residual(a, s) <= 1e-9);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(s.singulars[i] >= s.singulars[i + 1]);
    for (double sv : s.singulars) CHECK(sv >= 0.0);
  }
  // zero matrix: all singular values zero, bases still unitary
  const SvdResult z = svd(CMat(4, 4));
  for (double sv : z.singulars) CHECK(sv == 0.0);
  CHECK(unitarity_residual(z.left) <= 1e-10);
  CHECK(unitarity_residual(z.right) <= 1e-10);
}

TEST_CASE("expm: zero matrix and diagonal phases") {
  CHECK(max_abs_diff(expm(CMat(4, 4)), CMat::identity(4)) <= 1e-15);

  const Complex ip2(0, M_PI / 2);
  const CMat e = expm(CMat::diag({ip2, -ip2}));
  CHECK(std::abs(e(0, 0) - Complex(0, 1)) <= 1e-12);
  CHECK(std::abs(e(1, 1) - Complex(0, -1)) <= 1e-12);
  CHECK(std::abs(e(0, 1)) <= 1e-12);
}

TEST_CASE("expm: reproduces the closed-form cloning operator") {
  // closed form evaluated independently (machines module) is the oracle
  const PseudoSystem sys = build_system(0.7);
  const CMat a = scale(Complex(0, -M_PI / 2), sys.h);
  CHECK(max_abs_diff(expm(a), cloning_operator(0.7).op) <= 1e-9);
  CHECK(max_abs_diff(expm_series(a), cloning_operator(0.7).op) <= 1e-9);
  CHECK(max_abs_diff(expm_eigen(a), cloning_operator(0.7).op) <= 1e-9);
}

TEST_CASE("expm: eigen and series paths agree on the Hamiltonian family") {
  for (double theta : {-2.0, -1.0, -0.3, 0.0, 0.3, 1.0, 2.0}) {
    const PseudoSystem sys = build_system(theta);
    CHECK(max_abs_diff(expm_eigen(sys.h), expm_series(sys.h)) <= 1e-8);
    const CMat gen = scale(Complex(0, -M_PI / 2), sys.h);
    CHECK(max_abs_diff(expm_eigen(gen), expm_series(gen)) <= 1e-8);
  }
}

TEST_CASE("expm: defective input falls back to the series path") {
  const CMat jordan{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(expm_eigen(jordan), NumericalError);
  const CMat e = expm(jordan);  // e^J = [[1, 1], [0, 1]]
  CHECK(std::abs(e(0, 0) - 1.0) <= 1e-14);
  CHECK(std::abs(e(0, 1) - 1.0) <= 1e-14);
  CHECK(std::abs(e(1, 0)) <= 1e-14);
  CHECK(std::abs(e(1, 1) - 1.0) <= 1e-14);
}

TEST_CASE("inverse: round trip and singular detection") {
  const CMat a = random_gaussian(4, 77);
  CHECK(max_abs_diff(matmul(a, inverse(a)), CMat::identity(4)) <= 1e-10);
  CHECK_THROWS_AS(inverse(CMat(3, 3)), NumericalError);  // zero matrix
}

TEST_CASE("ket helpers") {
  const Ket v{Complex(3, 0), Complex(0, 4)};
  CHECK(norm(v) == doctest::Approx(5.0));
  CHECK(norm(normalized(v)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(normalized(Ket{0, 0}), NumericalError);
  CHECK(std::abs(inner(v, v) - Complex(25, 0)) <= 1e-12);
  // collinearity ignores global phase
  const Ket w = scale(std::polar(2.0, 1.234), v);
  CHECK(collinearity(v, w) == doctest::Approx(1.0));
}
