// Copyright 2026 The fentropy authors
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

#include "fentropy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fentropy::linalg {

Matrix::Matrix(int rows, int cols, std::initializer_list<cplx> entries) : Matrix(rows, cols) {
  if (static_cast<std::size_t>(rows) * cols != entries.size()) {
    throw DimensionMismatch("initializer list size does not match matrix shape");
  }
  std::copy(entries.begin(), entries.end(), a_.begin());
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

cplx Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx z) {
  for (auto& v : a_) v *= z;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* brow = b.data() + static_cast<std::size_t>(k) * b.cols_;
      cplx* rrow = r.data() + static_cast<std::size_t>(i) * r.cols_;
      for (int j = 0; j < b.cols_; ++j) rrow[j] += aik * brow[j];
    }
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx(0.0, 0.0)) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return r;
}

cplx hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("inner product shape mismatch");
  }
  cplx s = 0.0;
  const cplx* pa = a.data();
  const cplx* pb = b.data();
  const std::size_t n = static_cast<std::size_t>(a.rows()) * a.cols();
  for (std::size_t k = 0; k < n; ++k) s += std::conj(pa[k]) * pb[k];
  return s;
}

Matrix HermitianEig::reconstruct() const {
  const int n = eigenvectors.rows();
  Matrix scaled = eigenvectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
  return scaled * eigenvectors.adjoint();
}

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided Jacobi rotation zeroing a(p,q). The plane rotation is
//   U = [[c, -s u], [s conj(u), c]],  u = a(p,q)/|a(p,q)|,
// with t = s/c the smaller-magnitude root of t^2 - 2 tau t - 1 = 0,
// tau = (a(q,q) - a(p,p)) / (2 |a(p,q)|).
void jacobi_rotate(Matrix& a, Matrix& v, int p, int q) {
  const cplx g = a(p, q);
  const double r = std::abs(g);
  if (r < 1e-300) return;
  const cplx u = g / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double root = std::sqrt(tau * tau + 1.0);
  // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0 in the rationalized form
  // (tau - root cancels catastrophically for large |tau|).
  const double t = (tau >= 0.0) ? (-1.0 / (tau + root)) : (1.0 / (-tau + root));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const int n = a.rows();
  // A <- A U (columns p, q)
  for (int k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(u) * akq;
    a(k, q) = -s * u * akp + c * akq;
  }
  // A <- U^dagger A (rows p, q)
  for (int k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + s * u * aqk;
    a(q, k) = -s * std::conj(u) * apk + c * aqk;
  }
  // Clean the target element and keep the matrix exactly Hermitian there.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V U
  for (int k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp + s * std::conj(u) * vkq;
    v(k, q) = -s * u * vkp + c * vkq;
  }
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("eigendecomposition of non-square matrix");
  const int n = m.rows();
  const double fro = m.frobenius_norm();
  const double defect = distance(m, m.adjoint(), Norm::Frobenius);
  if (defect > 1e-12 * std::max(fro, 1.0)) {
    throw NonHermitianInput("matrix is not Hermitian to 1e-12 (relative)");
  }

  // Work on the Hermitized copy so tiny asymmetries cannot accumulate.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  Matrix v = Matrix::identity(n);
  // Quadratic convergence makes machine-level off-diagonal mass reachable in
  // a handful of sweeps; the stall exit guards against limit cycles there.
  const double tol = std::max(1e-306, std::numeric_limits<double>::epsilon() * fro);
  double prev_off = std::numeric_limits<double>::max();
  for (int sweep = 0; sweep < 100 && n > 1; ++sweep) {
    const double off = offdiag_norm(a);
    if (off <= tol) break;
    if (off >= prev_off && off <= 1e-12 * std::max(fro, 1e-30)) break;
    prev_off = off;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

double default_support_tol(int dim, const std::vector<double>& eigenvalues) {
  double amax = 0.0;
  for (double e : eigenvalues) amax = std::max(amax, std::abs(e));
  return dim * std::numeric_limits<double>::epsilon() * std::max(amax, 1e-300);
}

namespace {

Matrix apply_spectral(const HermitianEig& eig, const std::vector<double>& mapped) {
  const int n = eig.eigenvectors.rows();
  Matrix scaled = eig.eigenvectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= mapped[j];
  return scaled * eig.eigenvectors.adjoint();
}

}  // namespace

Matrix matrix_function(const Matrix& m, MatrixFunc f, double support_tol) {
  const HermitianEig eig = hermitian_eig(m);
  const int n = m.rows();
  const double tol = support_tol < 0.0 ? default_support_tol(n, eig.eigenvalues) : support_tol;

  if (f != MatrixFunc::Exp) {
    for (double e : eig.eigenvalues) {
      if (e < -tol) throw NegativeEigenvalue("matrix function on non-PSD input");
    }
  }

  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    const double e = eig.eigenvalues[k];
    switch (f) {
      case MatrixFunc::Log:
        mapped[k] = (e <= tol) ? 0.0 : std::log(e);
        break;
      case MatrixFunc::Sqrt:
        mapped[k] = (e <= tol) ? 0.0 : std::sqrt(e);
        break;
      case MatrixFunc::InvSqrt:
        mapped[k] = (e <= tol) ? 0.0 : 1.0 / std::sqrt(e);
        break;
      case MatrixFunc::Exp:
        mapped[k] = std::exp(e);
        break;
    }
  }
  return apply_spectral(eig, mapped);
}

Matrix matrix_power(const Matrix& m, double exponent, double support_tol) {
  const HermitianEig eig = hermitian_eig(m);
  const int n = m.rows();
  const double tol = support_tol < 0.0 ? default_support_tol(n, eig.eigenvalues) : support_tol;
  for (double e : eig.eigenvalues) {
    if (e < -tol) throw NegativeEigenvalue("matrix power on non-PSD input");
  }
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    const double e = eig.eigenvalues[k];
    mapped[k] = (e <= tol) ? 0.0 : std::pow(e, exponent);
  }
  return apply_spectral(eig, mapped);
}

std::vector<double> singular_values(const Matrix& m) {
  const Matrix gram = m.adjoint() * m;
  HermitianEig eig = hermitian_eig(gram);
  std::vector<double> sv(eig.eigenvalues.size());
  for (std::size_t k = 0; k < sv.size(); ++k) {
    sv[k] = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

double operator_norm(const Matrix& m) {
  const auto sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

double trace_norm(const Matrix& m) {
  const auto sv = singular_values(m);
  double s = 0.0;
  for (double x : sv) s += x;
  return s;
}

double distance(const Matrix& a, const Matrix& b, Norm norm) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("distance between different shapes");
  }
  const Matrix d = a - b;
  switch (norm) {
    case Norm::Frobenius:
      return d.frobenius_norm();
    case Norm::Operator:
      return operator_norm(d);
    case Norm::Trace:
      return trace_norm(d);
  }
  return 0.0;
}

}  // namespace fentropy::linalg
