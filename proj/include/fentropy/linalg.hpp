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

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "fentropy/errors.hpp"

namespace fentropy::linalg {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::initializer_list<cplx> entries);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx z);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx z) { return a *= z; }
  friend Matrix operator*(cplx z, Matrix a) { return a *= z; }
  friend Matrix operator*(Matrix a, double z) { return a *= cplx(z, 0.0); }
  friend Matrix operator*(double z, Matrix a) { return a *= cplx(z, 0.0); }
  friend Matrix operator-(const Matrix& a) { return a * cplx(-1.0, 0.0); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Hilbert-Schmidt inner product Tr(a^dagger b), no normalization.
cplx hs_inner(const Matrix& a, const Matrix& b);

/// Result of a Hermitian eigendecomposition: M = U diag(lambda) U^dagger,
/// eigenvalues ascending, eigenvectors as the columns of a unitary U.
struct HermitianEig {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Throws
/// NonHermitianInput when the relative Hermiticity defect exceeds 1e-12.
HermitianEig hermitian_eig(const Matrix& m);

enum class MatrixFunc { Log, Sqrt, InvSqrt, Exp };

/// Spectral function on a positive semidefinite matrix. Eigenvalues below
/// support_tol are treated as kernel: log and inv_sqrt map them to 0 (support
/// convention). Negative support_tol selects dim * eps * max|eigenvalue|.
/// Throws NegativeEigenvalue when an eigenvalue falls below -support_tol
/// (Exp is exempt from the positivity requirement).
Matrix matrix_function(const Matrix& m, MatrixFunc f, double support_tol = -1.0);

/// Fractional matrix power on the support, kernel mapped to 0.
Matrix matrix_power(const Matrix& m, double exponent, double support_tol = -1.0);

/// Default kernel threshold for a spectrum: dim * eps * max|eigenvalue|.
double default_support_tol(int dim, const std::vector<double>& eigenvalues);

enum class Norm { Frobenius, Operator, Trace };

std::vector<double> singular_values(const Matrix& m);
double operator_norm(const Matrix& m);
double trace_norm(const Matrix& m);

/// Distance between equal-shaped matrices in the requested norm.
double distance(const Matrix& a, const Matrix& b, Norm norm);

}  // namespace fentropy::linalg
