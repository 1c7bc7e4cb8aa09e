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

#include "pseudoq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace pseudoq::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require(bool cond, const char* what) {
  if (!cond) throw DimensionError(what);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

// -- CMat ----------------------------------------------------------------

CMat::CMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, "CMat: data length must equal rows*cols");
  if (!all_finite()) throw std::invalid_argument("CMat: non-finite entry");
}

CMat::CMat(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "CMat: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw std::invalid_argument("CMat: non-finite entry");
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diag(const std::vector<Complex>& entries) {
  CMat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMat CMat::diag_real(const std::vector<double>& entries) {
  CMat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool CMat::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

// -- arithmetic ------------------------------------------------------------

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return out;
}

Ket kron(const Ket& u, const Ket& v) {
  Ket out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  return out;
}

CMat matmul(const CMat& a, const CMat& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions differ");
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMat adjoint(const CMat& a) {
  CMat out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Ket apply(const CMat& a, const Ket& v) {
  require(a.cols() == v.dim(), "apply: matrix/vector dimensions differ");
  Ket out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

CMat add(const CMat& a, const CMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shapes differ");
  CMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

CMat sub(const CMat& a, const CMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "sub: shapes differ");
  CMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

CMat scale(Complex s, const CMat& a) {
  CMat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Ket add(const Ket& u, const Ket& v) {
  require(u.dim() == v.dim(), "add: ket dimensions differ");
  Ket out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
  return out;
}

Ket scale(Complex s, const Ket& u) {
  Ket out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = s * u[i];
  return out;
}

// -- vector geometry ---------------------------------------------------------

Complex inner(const Ket& u, const Ket& v) {
  require(u.dim() == v.dim(), "inner: ket dimensions differ");
  Complex s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const Ket& u) {
  double s = 0;
  for (const Complex& z : u.amp) s += std::norm(z);
  return std::sqrt(s);
}

Ket normalized(const Ket& u) {
  const double n = norm(u);
  if (!(n > 0) || !std::isfinite(n))
    throw NumericalError("normalized: zero or non-finite norm");
  return scale(Complex(1.0 / n, 0), u);
}

double collinearity(const Ket& u, const Ket& v) {
  return std::abs(inner(normalized(u), normalized(v)));
}

// -- matrix norms -------------------------------------------------------------

double max_abs(const CMat& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shapes differ");
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

namespace {

double one_norm(const CMat& a) {
  double m = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

// -- LU with partial pivoting -------------------------------------------------

struct Lu {
  CMat f;                 // packed L (unit diagonal) and U
  std::vector<std::size_t> perm;  // row permutation applied to the input
};

Lu lu_factor(CMat a) {
  const std::size_t n = a.rows();
  require(n == a.cols(), "lu: matrix must be square");
  const double floor = kEps * std::max(1.0, max_abs(a)) * static_cast<double>(n);
  Lu out{CMat(), std::vector<std::size_t>(n)};
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) <= floor) throw NumericalError("lu: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(out.perm[k], out.perm[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const Complex lik = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
    }
  }
  out.f = std::move(a);
  return out;
}

CMat lu_solve(const Lu& lu, const CMat& b) {
  const std::size_t n = lu.f.rows();
  require(b.rows() == n, "lu_solve: rhs rows differ");
  CMat x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    // forward
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b(lu.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= lu.f(i, j) * x(j, c);
      x(i, c) = s;
    }
    // backward
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = x(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu.f(ii, j) * x(j, c);
      x(ii, c) = s / lu.f(ii, ii);
    }
  }
  return x;
}

}  // namespace

CMat inverse(const CMat& a) {
  return lu_solve(lu_factor(a), CMat::identity(a.rows()));
}

// -- Schur form and eigenpairs -----------------------------------------------

namespace {

// Householder reduction to upper Hessenberg; q accumulates the similarity.
void hessenberg(CMat& a, CMat& q) {
  const std::size_t n = a.rows();
  q = CMat::identity(n);
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm <= kEps * max_abs(a)) continue;
    const Complex x0 = a(k + 1, k);
    const Complex alpha = -std::polar(xnorm, std::arg(x0));
    double vnorm2 = 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 <= 0) continue;
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;
    // rows: a -= 2 v (v^dag a)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    // cols: a -= 2 (a v) v^dag
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += q(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= s * std::conj(v[j]);
    }
  }
}

// Shifted QR on a Hessenberg matrix, to (complex) Schur form a = q t q^dag.
void schur_decompose(CMat& a, CMat& q) {
  const std::size_t n = a.rows();
  hessenberg(a, q);
  const double scale = std::max(1.0, max_abs(a));
  std::size_t hi = n - 1;
  int stagnant = 0;
  int budget = 200 * static_cast<int>(n);
  while (hi > 0) {
    // deflate converged subdiagonals
    std::size_t lo = hi;
    while (lo > 0) {
      double s = std::abs(a(lo - 1, lo - 1)) + std::abs(a(lo, lo));
      if (s == 0) s = scale;
      if (std::abs(a(lo, lo - 1)) <= kEps * s) {
        a(lo, lo - 1) = 0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      stagnant = 0;
      continue;
    }
    if (--budget < 0) throw NumericalError("eig_general: QR iteration did not converge");

    Complex mu;
    if (++stagnant % 16 == 0) {
      // exceptional shift to break rare cycling
      mu = a(hi, hi) + 0.75 * std::abs(a(hi, hi - 1));
    } else {
      const Complex w = a(hi - 1, hi - 1), x = a(hi - 1, hi);
      const Complex y = a(hi, hi - 1), z = a(hi, hi);
      const Complex tr = w + z;
      const Complex disc = std::sqrt(tr * tr - 4.0 * (w * z - x * y));
      const Complex mu1 = 0.5 * (tr + disc), mu2 = 0.5 * (tr - disc);
      mu = std::abs(mu1 - z) < std::abs(mu2 - z) ? mu1 : mu2;
    }

    for (std::size_t i = lo; i <= hi; ++i) a(i, i) -= mu;
    struct Rot {
      Complex c, s;
      std::size_t i;
    };
    std::vector<Rot> rots;
    rots.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
      const Complex x = a(i, i), y = a(i + 1, i);
      const double r = std::sqrt(std::norm(x) + std::norm(y));
      Complex c{1, 0}, s{0, 0};
      if (r > 0) {
        c = x / r;
        s = y / r;
      }
      // full rows: the block couples to everything right of it
      for (std::size_t j = i; j < n; ++j) {
        const Complex t1 = a(i, j), t2 = a(i + 1, j);
        a(i, j) = std::conj(c) * t1 + std::conj(s) * t2;
        a(i + 1, j) = -s * t1 + c * t2;
      }
      rots.push_back({c, s, i});
    }
    for (const Rot& g : rots) {
      // full columns: rows above the block couple into it
      for (std::size_t r2 = 0; r2 <= g.i + 1; ++r2) {
        const Complex t1 = a(r2, g.i), t2 = a(r2, g.i + 1);
        a(r2, g.i) = t1 * g.c + t2 * g.s;
        a(r2, g.i + 1) = -t1 * std::conj(g.s) + t2 * std::conj(g.c);
      }
      for (std::size_t r2 = 0; r2 < n; ++r2) {
        const Complex t1 = q(r2, g.i), t2 = q(r2, g.i + 1);
        q(r2, g.i) = t1 * g.c + t2 * g.s;
        q(r2, g.i + 1) = -t1 * std::conj(g.s) + t2 * std::conj(g.c);
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) a(i, i) += mu;
  }
}

}  // namespace

std::vector<EigPair> eig_general(const CMat& a) {
  const std::size_t n = a.rows();
  require(n == a.cols(), "eig_general: matrix must be square");
  require(n >= 1 && n <= kMaxDim, "eig_general: dimension must be in [1,8]");
  if (!a.all_finite()) throw std::invalid_argument("eig_general: non-finite entry");

  CMat t = a, q;
  schur_decompose(t, q);

  const double tnorm = std::max(1.0, max_abs(t));
  std::vector<EigPair> pairs;
  pairs.reserve(n);
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(y.begin(), y.end(), Complex{});
    y[k] = 1.0;
    for (std::size_t jj = k; jj-- > 0;) {
      Complex s = 0;
      for (std::size_t m = jj + 1; m <= k; ++m) s += t(jj, m) * y[m];
      Complex den = t(jj, jj) - t(k, k);
      if (std::abs(den) < kEps * tnorm) den = Complex(kEps * tnorm, 0);
      y[jj] = -s / den;
    }
    Ket vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0;
      for (std::size_t j = 0; j <= k; ++j) s += q(i, j) * y[j];
      vec[i] = s;
    }
    pairs.push_back({t(k, k), normalized(vec)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const EigPair& l, const EigPair& r) {
    if (l.value.real() != r.value.real()) return l.value.real() > r.value.real();
    return l.value.imag() > r.value.imag();
  });
  return pairs;
}

// -- SVD --------------------------------------------------------------------

SvdResult svd(const CMat& a) {
  const std::size_t n = a.rows();
  require(n == a.cols(), "svd: matrix must be square");
  require(n >= 1 && n <= kMaxDim, "svd: dimension must be in [1,8]");
  if (!a.all_finite()) throw std::invalid_argument("svd: non-finite entry");

  CMat w = a;
  CMat v = CMat::identity(n);
  const int max_sweeps = 64;
  int sweep = 0;
  for (;; ++sweep) {
    if (sweep >= max_sweeps) throw NumericalError("svd: Jacobi sweeps did not converge");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t qc = p + 1; qc < n; ++qc) {
        Complex g = 0;
        double app = 0, aqq = 0;
        for (std::size_t i = 0; i < n; ++i) {
          g += std::conj(w(i, p)) * w(i, qc);
          app += std::norm(w(i, p));
          aqq += std::norm(w(i, qc));
        }
        const double offmag = std::abs(g);
        if (offmag <= 1e-15 * std::sqrt(app * aqq) || offmag == 0) continue;
        rotated = true;
        const Complex phase = g / offmag;
        const double zeta = (aqq - app) / (2.0 * offmag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex ph = std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex wp = w(i, p), wq = w(i, qc);
          w(i, p) = c * wp - s * ph * wq;
          w(i, qc) = s * wp + c * ph * wq;
          const Complex vp = v(i, p), vq = v(i, qc);
          v(i, p) = c * vp - s * ph * vq;
          v(i, qc) = s * vp + c * ph * vq;
        }
      }
    }
    if (!rotated) break;
  }

  // column norms are the singular values; sort descending
  std::vector<double> sig(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(w(i, j));
    sig[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&sig](std::size_t l, std::size_t r) { return sig[l] > sig[r]; });

  SvdResult out{CMat(n, n), std::vector<double>(n), CMat(n, n)};
  const double sig_floor = (n ? sig[order[0]] : 0.0) * 1e-13;
  std::vector<std::size_t> deficient;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.singulars[j] = sig[src];
    for (std::size_t i = 0; i < n; ++i) out.right(i, j) = v(i, src);
    if (sig[src] > sig_floor && sig[src] > 0) {
      const double inv = 1.0 / sig[src];
      for (std::size_t i = 0; i < n; ++i) out.left(i, j) = w(i, src) * inv;
    } else {
      deficient.push_back(j);
    }
  }
  // complete left basis for (near-)zero singular values: Gram-Schmidt the
  // standard basis against the columns already present
  for (const std::size_t j : deficient) {
    for (std::size_t cand = 0; cand < n; ++cand) {
      std::vector<Complex> e(n);
      e[cand] = 1.0;
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        if (std::find(deficient.begin(), deficient.end(), j2) != deficient.end() && j2 >= j)
          continue;  // only orthogonalize against filled columns
        Complex ov = 0;
        for (std::size_t i = 0; i < n; ++i) ov += std::conj(out.left(i, j2)) * e[i];
        for (std::size_t i = 0; i < n; ++i) e[i] -= ov * out.left(i, j2);
      }
      double nrm2 = 0;
      for (const Complex& z : e) nrm2 += std::norm(z);
      if (nrm2 > 0.25) {  // well away from the span
        const double inv = 1.0 / std::sqrt(nrm2);
        for (std::size_t i = 0; i < n; ++i) out.left(i, j) = e[i] * inv;
        break;
      }
    }
  }
  return out;
}

// -- matrix exponential --------------------------------------------------------

CMat expm_series(const CMat& a) {
  const std::size_t n = a.rows();
  require(n == a.cols(), "expm: matrix must be square");
  require(n >= 1 && n <= kMaxDim, "expm: dimension must be in [1,8]");
  if (!a.all_finite()) throw std::invalid_argument("expm: non-finite entry");

  int squarings = 0;
  double nrm = one_norm(a);
  while (nrm > 0.5 && squarings < 64) {
    nrm *= 0.5;
    ++squarings;
  }
  const double fac = std::ldexp(1.0, -squarings);
  CMat b = scale(Complex(fac, 0), a);

  CMat total = CMat::identity(n);
  CMat term = CMat::identity(n);
  bool converged = false;
  for (int m = 1; m <= 40; ++m) {
    term = scale(Complex(1.0 / m, 0), matmul(term, b));
    total = add(total, term);
    if (max_abs(term) <= 1e-18 * std::max(1.0, max_abs(total))) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalError("expm_series: Taylor sum did not converge");
  for (int k = 0; k < squarings; ++k) total = matmul(total, total);
  return total;
}

CMat expm_eigen(const CMat& a) {
  const std::size_t n = a.rows();
  require(n == a.cols(), "expm: matrix must be square");
  const std::vector<EigPair> pairs = eig_general(a);

  CMat vmat(n, n);
  std::vector<Complex> expvals(n);
  for (std::size_t j = 0; j < n; ++j) {
    expvals[j] = std::exp(pairs[j].value);
    for (std::size_t i = 0; i < n; ++i) vmat(i, j) = pairs[j].vector[i];
  }
  const CMat vinv = inverse(vmat);  // throws NumericalError when defective

  // reject eigenbases too ill-conditioned to reproduce a
  CMat lam(n, n);
  for (std::size_t j = 0; j < n; ++j) lam(j, j) = pairs[j].value;
  const double resid = max_abs_diff(matmul(vmat, matmul(lam, vinv)), a);
  if (resid > 1e-10 * std::max(1.0, max_abs(a)))
    throw NumericalError("expm_eigen: eigenbasis too ill-conditioned");

  return matmul(vmat, matmul(CMat::diag(expvals), vinv));
}

CMat expm(const CMat& a) {
  try {
    return expm_eigen(a);
  } catch (const NumericalError&) {
    return expm_series(a);
  }
}

}  // namespace pseudoq::linalg
