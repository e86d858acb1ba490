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

#include <cmath>

#include <doctest.h>

#include "fentropy/linalg.hpp"
#include "fentropy/rng.hpp"

using namespace fentropy;
using linalg::cplx;
using linalg::Matrix;

namespace {

Matrix random_hermitian(int n, Rng& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Matrix random_psd(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  return g * g.adjoint();
}

}  // namespace

TEST_CASE("pauli matrices have eigenvalues -1, 1") {
  const Matrix z(2, 2, {1, 0, 0, -1});
  const auto ez = linalg::hermitian_eig(z);
  CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  const Matrix x(2, 2, {0, 1, 1, 0});
  const auto ex = linalg::hermitian_eig(x);
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hopping density spectrum on two modes") {
  // 1 + K with K = -(|01><10| + |10><01|)/2: eigenvalues 1/2, 1, 1, 3/2.
  Matrix m = Matrix::identity(4);
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  const auto eig = linalg::hermitian_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(eig.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(eig.eigenvalues[3] == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("eigendecomposition reconstructs and is unitary") {
  Rng rng(42);
  for (int n : {2, 8, 32, 64}) {
    const Matrix m = random_hermitian(n, rng);
    const auto eig = linalg::hermitian_eig(m);
    CHECK(linalg::distance(eig.reconstruct(), m, linalg::Norm::Frobenius) <=
          n * 1e-12 * m.frobenius_norm());
    const Matrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    CHECK(linalg::distance(gram, Matrix::identity(n), linalg::Norm::Frobenius) <= 1e-12 * n);
    for (std::size_t k = 0; k + 1 < eig.eigenvalues.size(); ++k) {
      CHECK(eig.eigenvalues[k] <= eig.eigenvalues[k + 1]);
    }
  }
}

TEST_CASE("eigenvalue sum equals trace") {
  Rng rng(7);
  const Matrix m = random_hermitian(24, rng);
  const auto eig = linalg::hermitian_eig(m);
  double sum = 0.0;
  for (double e : eig.eigenvalues) sum += e;
  CHECK(sum == doctest::Approx(m.trace().real()).epsilon(1e-10));
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m(2, 2, {0, 1, 0, 0});
  CHECK_THROWS_AS(linalg::hermitian_eig(m), NonHermitianInput);
}

TEST_CASE("matrix function basics") {
  CHECK(linalg::matrix_function(Matrix::identity(3), linalg::MatrixFunc::Log).frobenius_norm() <=
        1e-14);

  const Matrix d(2, 2, {4, 0, 0, 9});
  const Matrix r = linalg::matrix_function(d, linalg::MatrixFunc::Sqrt);
  CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

  // Kernel convention: inv_sqrt acts as 0 on the kernel.
  const Matrix s(2, 2, {0, 0, 0, 4});
  const Matrix is = linalg::matrix_function(s, linalg::MatrixFunc::InvSqrt);
  CHECK(std::abs(is(0, 0)) <= 1e-14);
  CHECK(is(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("negative eigenvalue rejected by matrix functions") {
  const Matrix m(2, 2, {-1, 0, 0, 1});
  CHECK_THROWS_AS(linalg::matrix_function(m, linalg::MatrixFunc::Sqrt), NegativeEigenvalue);
}

TEST_CASE("log/exp and sqrt round trips") {
  Rng rng(11);
  for (int n : {8, 32, 64}) {
    const Matrix m = random_psd(n, rng);
    const Matrix shifted = m + Matrix::identity(n);
    const Matrix back = linalg::matrix_function(
        linalg::matrix_function(shifted, linalg::MatrixFunc::Log), linalg::MatrixFunc::Exp);
    CHECK(linalg::distance(back, shifted, linalg::Norm::Frobenius) <=
          1e-9 * shifted.frobenius_norm());

    const Matrix root = linalg::matrix_function(m, linalg::MatrixFunc::Sqrt);
    CHECK(linalg::distance(root * root, m, linalg::Norm::Frobenius) <=
          1e-10 * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("matrix power matches sqrt") {
  Rng rng(13);
  const Matrix m = random_psd(12, rng);
  const Matrix a = linalg::matrix_power(m, 0.5);
  const Matrix b = linalg::matrix_function(m, linalg::MatrixFunc::Sqrt);
  CHECK(linalg::distance(a, b, linalg::Norm::Frobenius) <= 1e-10 * m.frobenius_norm());
}

TEST_CASE("distance conventions") {
  const Matrix x(2, 2, {1, 0, 0, 0});
  const Matrix zero(2, 2);
  CHECK(linalg::distance(x, x, linalg::Norm::Frobenius) == 0.0);
  CHECK(linalg::distance(x, zero, linalg::Norm::Trace) == doctest::Approx(1.0).epsilon(1e-12));

  const Matrix pm(2, 2, {1, 0, 0, -1});
  CHECK(linalg::distance(pm, zero, linalg::Norm::Operator) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(linalg::distance(x, Matrix::identity(3), linalg::Norm::Frobenius),
                  DimensionMismatch);
}
