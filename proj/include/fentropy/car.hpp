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

#include <string>
#include <vector>

#include "fentropy/linalg.hpp"

namespace fentropy::car {

using linalg::cplx;
using linalg::Matrix;

/// A set of mode indices, 1-based, strictly increasing.
struct Region {
  std::vector<int> modes;

  Region() = default;
  Region(std::initializer_list<int> m);
  explicit Region(std::vector<int> m);

  int size() const { return static_cast<int>(modes.size()); }
  bool contains(int mode) const;
  bool disjoint_from(const Region& other) const;
  Region union_with(const Region& other) const;
  std::string to_string() const;
};

/// Matrix representation of the CAR algebra of n fermionic modes on the
/// 2^n-dimensional Fock space, built by the Jordan-Wigner transformation.
///
/// Conventions (pinned so every matrix is reproducible bit for bit):
///   - basis |n_1 ... n_k> with mode 1 most significant;
///   - single-mode lowering matrix a = [[0,1],[0,0]] in basis (|0>,|1>);
///   - v = a^dag a - a a^dag = diag(-1,+1);
///   - a_i carries the string v_1 ... v_{i-1} before the local lowering slot.
class FockRep {
 public:
  explicit FockRep(int n_modes);

  int n_modes() const { return n_; }
  int dim() const { return dim_; }

  /// Annihilator a_i, 1-based mode index.
  const Matrix& annihilator(int mode) const;
  Matrix creator(int mode) const { return annihilator(mode).adjoint(); }

  /// Grading unitary V = v_1 ... v_n (self-adjoint, V a_i V = -a_i).
  const Matrix& grading_unitary() const { return grading_; }

  /// Total number operator (diagonal).
  const Matrix& number_operator() const { return number_; }

  Region full_region() const;

  /// Normalized trace tau(x) = Tr(x) / 2^n.
  cplx tau(const Matrix& x) const;
  /// tau(x^dag y), the tracial inner product.
  cplx tau_inner(const Matrix& x, const Matrix& y) const;
  /// sqrt(tau(x^dag x)).
  double tau_norm(const Matrix& x) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<Matrix> annihilators_;
  Matrix grading_;
  Matrix number_;
};

/// Grading automorphism Theta(x) = V x V.
Matrix grading(const FockRep& rep, const Matrix& x);

/// Even/odd decomposition x = x_plus + x_minus, Theta(x_pm) = +-x_pm.
struct EvenOddParts {
  Matrix even;
  Matrix odd;
};
EvenOddParts even_odd_split(const FockRep& rep, const Matrix& x);

/// Frobenius tau-norm of the odd part (0 exactly for even operators).
double odd_part_norm(const FockRep& rep, const Matrix& x);

/// U(1) gauge transformation gamma_theta = Ad(exp(i theta N)).
Matrix gauge_transform(const FockRep& rep, const Matrix& x, double theta);

/// Average over the gauge orbit: projection onto the blocks of constant total
/// occupation number. Exact (no angular quadrature); idempotent; fixes x iff
/// x is gauge invariant.
Matrix gauge_average(const FockRep& rep, const Matrix& x);

/// v_I = prod_{i in I} v_i: self-adjoint even unitary implementing the
/// grading on the subalgebra of region I.
Matrix region_unitary(const FockRep& rep, const Region& region);

enum class SubalgebraKind { Regional, Twisted };

/// A *-subalgebra identified by an orthonormal (under tau) operator basis.
/// The basis elements stay Theta-homogeneous; `even_mask[k]` records the
/// parity of basis element k.
struct Subalgebra {
  SubalgebraKind kind = SubalgebraKind::Regional;
  Region region;
  Region twist;  // empty for regional subalgebras
  int space_dim = 0;
  int n_modes = 0;
  int factor_dim = 0;  // the subalgebra is a factor isomorphic to M_factor_dim
  std::vector<Matrix> basis;
  std::vector<bool> even_mask;

  std::string label() const;
  /// Indices of the even basis elements.
  std::vector<int> even_indices() const;
};

/// Orthonormal monomial basis of the algebra generated by a_i, a_i^dag for
/// i in the region (normal order: creators before annihilators, ascending
/// mode index; Gram-Schmidt under tau).
Subalgebra regional_subalgebra(const FockRep& rep, const Region& region);

/// Twisted variant: even monomials unchanged, odd monomials premultiplied by
/// v_twist. The result commutes elementwise with the algebra of the twist
/// region. Throws OverlappingRegions when region and twist intersect.
Subalgebra twisted_subalgebra(const FockRep& rep, const Region& region, const Region& twist);

}  // namespace fentropy::car
