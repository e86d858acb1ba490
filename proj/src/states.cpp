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

#include "fentropy/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fentropy/rng.hpp"

namespace fentropy::states {

StateDensity make_state(const FockRep& rep, Matrix rho) {
  if (rho.rows() != rep.dim() || rho.cols() != rep.dim()) {
    throw DimensionMismatch("density has wrong dimension for the representation");
  }
  const double herm_defect = linalg::distance(rho, rho.adjoint(), linalg::Norm::Frobenius);
  if (herm_defect > 1e-10 * std::max(1.0, rho.frobenius_norm())) {
    throw NonHermitianInput("density is not Hermitian");
  }
  const auto eig = linalg::hermitian_eig(rho);
  if (eig.eigenvalues.front() < -1e-10) {
    throw NegativeEigenvalue("density is not positive semidefinite");
  }
  const double tr = rep.tau(rho).real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw Error("density is not tau-normalized");
  }
  return StateDensity{rep.n_modes(), std::move(rho)};
}

StateDensity random_state(const FockRep& rep, StateKind kind, std::uint64_t seed) {
  Rng rng(seed);
  const int d = rep.dim();
  Matrix rho(d, d);

  if (kind == StateKind::Pure) {
    std::vector<cplx> v(d);
    double nrm2 = 0.0;
    for (auto& z : v) {
      z = rng.complex_normal();
      nrm2 += std::norm(z);
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rho(i, j) = static_cast<double>(d) * v[i] * std::conj(v[j]) / nrm2;
    return StateDensity{rep.n_modes(), std::move(rho)};
  }

  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  rho = g * g.adjoint();

  if (kind == StateKind::Even) {
    rho = (rho + car::grading(rep, rho)) * 0.5;
  } else if (kind == StateKind::GaugeInvariant) {
    rho = car::gauge_average(rep, rho);
  }
  const double tr = rep.tau(rho).real();
  rho *= cplx(1.0 / tr, 0.0);
  return StateDensity{rep.n_modes(), std::move(rho)};
}

Matrix conditional_expectation(const Subalgebra& b, const Matrix& x) {
  if (x.rows() != b.space_dim || x.cols() != b.space_dim) {
    throw DimensionMismatch("conditional expectation: wrong operator size");
  }
  const double dim = b.space_dim;
  Matrix out(b.space_dim, b.space_dim);
  for (const Matrix& e : b.basis) {
    const cplx c = linalg::hs_inner(e, x) / dim;
    out += e * c;
  }
  return out;
}

StateDensity restrict_state(const StateDensity& phi, const Subalgebra& b) {
  if (phi.dim() != b.space_dim) throw DimensionMismatch("restrict: state/subalgebra mismatch");
  Matrix r = conditional_expectation(b, phi.rho);
  // E_B is positive and trace preserving, so this is again a density; tiny
  // negative eigenvalues from roundoff are left as is.
  return StateDensity{phi.n_modes, std::move(r)};
}

StateDensity product_extension(const FockRep& rep, const StateDensity& phi, const Region& region_i,
                               const StateDensity& psi, const Region& region_j) {
  if (!region_i.disjoint_from(region_j)) {
    throw OverlappingRegions("product extension requires disjoint regions");
  }
  if (phi.dim() != rep.dim() || psi.dim() != rep.dim()) {
    throw DimensionMismatch("product extension: wrong state dimension");
  }
  const Subalgebra sub_i = car::regional_subalgebra(rep, region_i);
  const Subalgebra sub_j = car::regional_subalgebra(rep, region_j);
  if (rep.tau_norm(conditional_expectation(sub_i, phi.rho) - phi.rho) > 1e-8 ||
      rep.tau_norm(conditional_expectation(sub_j, psi.rho) - psi.rho) > 1e-8) {
    throw Error("product extension: marginal not supported on its region");
  }
  const double odd_i = car::odd_part_norm(rep, phi.rho);
  const double odd_j = car::odd_part_norm(rep, psi.rho);
  if (odd_i > 1e-10 && odd_j > 1e-10) {
    throw BothMarginalsNoneven("no product state extension for two noneven marginals");
  }
  Matrix prod = phi.rho * psi.rho;
  // The factors commute because one of them is even; Hermitize to keep
  // roundoff symmetric.
  prod = (prod + prod.adjoint()) * 0.5;
  return StateDensity{rep.n_modes(), std::move(prod)};
}

StateDensity regularize(const StateDensity& phi, double eps) {
  if (eps <= 0.0 || eps > 1.0) throw Error("regularization parameter must lie in (0, 1]");
  Matrix r = Matrix::identity(phi.dim()) * eps + phi.rho * (1.0 - eps);
  return StateDensity{phi.n_modes, std::move(r)};
}

double tau_trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("trace distance shape mismatch");
  }
  return linalg::distance(a, b, linalg::Norm::Trace) / a.rows();
}

double CommutingSquareReport::max_residual() const {
  double m = 0.0;
  for (double r : residual) m = std::max(m, r);
  return m;
}

report::json to_json(const CommutingSquareReport& r) {
  report::json j;
  j["conditions"] = report::json::array();
  for (int k = 0; k < 5; ++k) j["conditions"].push_back(r.residual[k]);
  j["pass"] = r.pass;
  return j;
}

report::json to_json(const StateDensity& phi) {
  report::json j;
  j["n_modes"] = phi.n_modes;
  j["rho"] = report::matrix_to_json(phi.rho);
  return j;
}

StateDensity state_from_json(const report::json& j) {
  StateDensity phi;
  phi.n_modes = j.at("n_modes").get<int>();
  phi.rho = report::matrix_from_json(j.at("rho"));
  if (phi.rho.rows() != phi.dim()) throw Error("density payload has inconsistent dimension");
  return phi;
}

namespace {

double tau_norm_of(int dim, const Matrix& x) {
  return x.frobenius_norm() / std::sqrt(static_cast<double>(dim));
}

// E(unit_{ij}) = (1/dim) sum_k conj(e_k[i,j]) e_k, so sweeping matrix units
// reduces to linear combinations of precomputed images of the basis.
Matrix unit_image(const std::vector<Matrix>& images, const std::vector<Matrix>& basis, int i,
                  int j, int dim) {
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const cplx c = std::conj(basis[k](i, j)) / static_cast<double>(dim);
    if (c != cplx(0.0, 0.0)) out += images[k] * c;
  }
  return out;
}

}  // namespace

CommutingSquareReport commuting_square_check(const Subalgebra& ab, const Subalgebra& bc,
                                             const Subalgebra& b, double tol) {
  const int dim = ab.space_dim;
  if (bc.space_dim != dim || b.space_dim != dim) {
    throw DimensionMismatch("commuting square: subalgebras on different spaces");
  }
  for (const Matrix& e : b.basis) {
    if (tau_norm_of(dim, conditional_expectation(ab, e) - e) > 1e-8 ||
        tau_norm_of(dim, conditional_expectation(bc, e) - e) > 1e-8) {
      throw NotNested("A_B is not contained in both A_AB and A_BC");
    }
  }

  CommutingSquareReport rep;

  // Precomputed images of the subalgebra bases.
  std::vector<Matrix> ab_of_bc, b_of_bc, bc_of_ab, b_of_ab, b_of_abbc;
  ab_of_bc.reserve(bc.basis.size());
  b_of_bc.reserve(bc.basis.size());
  for (const Matrix& f : bc.basis) {
    ab_of_bc.push_back(conditional_expectation(ab, f));
    b_of_bc.push_back(conditional_expectation(b, f));
  }
  bc_of_ab.reserve(ab.basis.size());
  b_of_ab.reserve(ab.basis.size());
  for (const Matrix& g : ab.basis) {
    bc_of_ab.push_back(conditional_expectation(bc, g));
    b_of_ab.push_back(conditional_expectation(b, g));
  }
  b_of_abbc.reserve(bc.basis.size());
  for (const Matrix& m : ab_of_bc) b_of_abbc.push_back(conditional_expectation(b, m));

  // (1) and (2): restriction conditions over the respective domain bases.
  for (std::size_t k = 0; k < bc.basis.size(); ++k) {
    rep.residual[0] = std::max(rep.residual[0], tau_norm_of(dim, ab_of_bc[k] - b_of_bc[k]));
  }
  for (std::size_t k = 0; k < ab.basis.size(); ++k) {
    rep.residual[1] = std::max(rep.residual[1], tau_norm_of(dim, bc_of_ab[k] - b_of_ab[k]));
  }

  // (3), (4), (5): sweep the matrix units of the full algebra.
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Matrix e_b = unit_image(b.basis, b.basis, i, j, dim);
      const Matrix e_ab_bc = unit_image(ab_of_bc, bc.basis, i, j, dim);
      const Matrix e_bc_ab = unit_image(bc_of_ab, ab.basis, i, j, dim);
      const Matrix e_b_ab_bc = unit_image(b_of_abbc, bc.basis, i, j, dim);
      const double commute = tau_norm_of(dim, e_ab_bc - e_bc_ab);
      const double in_b = tau_norm_of(dim, e_ab_bc - e_b_ab_bc);
      rep.residual[2] = std::max(rep.residual[2], std::max(commute, in_b));
      rep.residual[3] = std::max(rep.residual[3], tau_norm_of(dim, e_ab_bc - e_b));
      rep.residual[4] = std::max(rep.residual[4], tau_norm_of(dim, e_bc_ab - e_b));
    }
  }

  rep.pass = rep.max_residual() <= tol;
  return rep;
}

namespace {

void require_pairwise_disjoint(const Region& a, const Region& b, const Region& c) {
  if (!a.disjoint_from(b) || !b.disjoint_from(c) || !a.disjoint_from(c)) {
    throw OverlappingRegions("triple regions must be pairwise disjoint");
  }
}

}  // namespace

Triple regional_triple(const FockRep& rep, const Region& a, const Region& b, const Region& c) {
  require_pairwise_disjoint(a, b, c);
  Triple t;
  t.ab = car::regional_subalgebra(rep, a.union_with(b));
  t.bc = car::regional_subalgebra(rep, b.union_with(c));
  t.b = car::regional_subalgebra(rep, b);
  std::ostringstream os;
  os << "regional A=" << a.to_string() << " B=" << b.to_string() << " C=" << c.to_string();
  t.label = os.str();
  t.square = commuting_square_check(t.ab, t.bc, t.b);
  return t;
}

Triple twisted_triple(const FockRep& rep, const Region& a, const Region& b, const Region& c) {
  require_pairwise_disjoint(a, b, c);
  Triple t;
  t.ab = car::regional_subalgebra(rep, a.union_with(b));
  t.bc = car::twisted_subalgebra(rep, b.union_with(c), a);
  t.b = car::twisted_subalgebra(rep, b, a);
  std::ostringstream os;
  os << "twisted A=" << a.to_string() << " B=" << b.to_string() << " C=" << c.to_string();
  t.label = os.str();
  t.square = commuting_square_check(t.ab, t.bc, t.b);
  return t;
}

}  // namespace fentropy::states
