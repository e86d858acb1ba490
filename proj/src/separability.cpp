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

#include "fentropy/separability.hpp"

#include <cmath>

namespace fentropy::separability {

using linalg::cplx;
using states::Subalgebra;

double hopping_witness(const StateDensity& omega, const Matrix& hopping) {
  if (omega.rho.rows() != hopping.rows()) {
    throw DimensionMismatch("hopping witness: dimension mismatch");
  }
  const int dim = omega.dim();
  return (linalg::hs_inner(hopping, omega.rho) / static_cast<double>(dim)).real();
}

BipartiteDensity jw_twist_image(const FockRep& rep, const StateDensity& omega,
                                const Region& region_a, const Region& region_c) {
  if (region_a.size() != 1 || region_c.size() != 1) {
    throw UnsupportedSize("twist image implemented for single-mode A and C");
  }
  if (!region_a.disjoint_from(region_c)) {
    throw OverlappingRegions("twist image regions must be disjoint");
  }
  if (omega.dim() != rep.dim()) throw DimensionMismatch("twist image: wrong state dimension");

  const int mode_a = region_a.modes[0];
  const int mode_c = region_c.modes[0];
  const Matrix a = rep.annihilator(mode_a);
  const Matrix c = rep.annihilator(mode_c);
  const Matrix v_a = car::region_unitary(rep, region_a);
  const double rt2 = std::sqrt(2.0);

  // tau-orthonormal bases of the two commuting single-mode factors and
  // their images under the slotwise isomorphism onto M_2.
  const Matrix ahat = v_a * c;  // fermion operator of the twisted C factor
  const std::vector<Matrix> factor_a = {Matrix::identity(rep.dim()), a * rt2, a.adjoint() * rt2,
                                        a.adjoint() * a * 2.0 - Matrix::identity(rep.dim())};
  const std::vector<Matrix> factor_c = {Matrix::identity(rep.dim()), ahat * rt2,
                                        ahat.adjoint() * rt2,
                                        ahat.adjoint() * ahat * 2.0 - Matrix::identity(rep.dim())};
  const Matrix m2_lower(2, 2, {0, 1, 0, 0});
  const std::vector<Matrix> images = {Matrix::identity(2), m2_lower * rt2,
                                      m2_lower.adjoint() * rt2, Matrix(2, 2, {-1, 0, 0, 1})};

  Matrix rho_image(4, 4);
  const double dim = rep.dim();
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      const Matrix element = factor_a[p] * factor_c[q];
      const cplx coeff = linalg::hs_inner(element, omega.rho) / dim;
      rho_image += linalg::kron(images[p], images[q]) * coeff;
    }
  }
  // rho_image is the tau-normalized density on M_2 (x) M_2; rescale to the
  // standard Tr-normalization.
  return BipartiteDensity{2, 2, rho_image * 0.25};
}

double ppt_min_eigenvalue(const Matrix& rho, int dim_left, int dim_right) {
  if (dim_left < 1 || dim_right < 1 || dim_left * dim_right != rho.rows() || !rho.is_square()) {
    throw BadSplit("partial transpose split does not match matrix size");
  }
  Matrix pt(rho.rows(), rho.cols());
  for (int il = 0; il < dim_left; ++il)
    for (int jl = 0; jl < dim_left; ++jl)
      for (int ir = 0; ir < dim_right; ++ir)
        for (int jr = 0; jr < dim_right; ++jr)
          pt(il * dim_right + ir, jl * dim_right + jr) =
              rho(il * dim_right + jr, jl * dim_right + ir);
  const auto eig = linalg::hermitian_eig(pt);
  return eig.eigenvalues.front();
}

double ppt_min_eigenvalue(const BipartiteDensity& rho) {
  return ppt_min_eigenvalue(rho.rho, rho.dim_left, rho.dim_right);
}

std::string SeparabilityCertificate::pair_label() const {
  if (pair == PairKind::Car) {
    return "car(" + region_a.to_string() + "," + region_c.to_string() + ")";
  }
  return "twisted(" + region_a.to_string() + ",~" + region_c.to_string() + ")";
}

SeparabilityVerdict classify_certificate(const SeparabilityCertificate& cert,
                                         double witness_tol) {
  if (cert.pair == PairKind::Car && std::abs(cert.witness_value) > witness_tol) {
    return SeparabilityVerdict::Nonseparable;
  }
  if (!cert.decomposition.empty()) return SeparabilityVerdict::Separable;
  if (cert.ppt_min) {
    if (*cert.ppt_min < -witness_tol) return SeparabilityVerdict::Nonseparable;
    const bool two_by_two = cert.region_a.size() == 1 && cert.region_c.size() == 1;
    if (two_by_two && cert.pair == PairKind::Twisted) return SeparabilityVerdict::Separable;
  }
  return SeparabilityVerdict::Undecided;
}

namespace {

// Spanning product test for one component state against the labeled pair.
double max_product_defect(const FockRep& rep, const Matrix& rho, const Subalgebra& sub_a,
                          const Subalgebra& sub_c) {
  double worst = 0.0;
  std::vector<cplx> exp_a(sub_a.basis.size());
  std::vector<cplx> exp_c(sub_c.basis.size());
  for (std::size_t j = 0; j < sub_a.basis.size(); ++j) exp_a[j] = rep.tau(rho * sub_a.basis[j]);
  for (std::size_t k = 0; k < sub_c.basis.size(); ++k) exp_c[k] = rep.tau(rho * sub_c.basis[k]);
  for (std::size_t j = 0; j < sub_a.basis.size(); ++j) {
    for (std::size_t k = 0; k < sub_c.basis.size(); ++k) {
      const cplx joint = rep.tau(rho * (sub_a.basis[j] * sub_c.basis[k]));
      worst = std::max(worst, std::abs(joint - exp_a[j] * exp_c[k]));
    }
  }
  return worst;
}

}  // namespace

bool verify_decomposition(const FockRep& rep, const SeparabilityCertificate& cert,
                          const StateDensity& omega) {
  if (cert.decomposition.empty()) {
    throw Error("certificate carries no decomposition");
  }
  Matrix sum(rep.dim(), rep.dim());
  for (const auto& comp : cert.decomposition) sum += comp.rho_ac * comp.weight;
  if (rep.tau_norm(sum - omega.rho) > 1e-10) {
    throw ReconstructionFailed("decomposition does not reconstruct the state");
  }

  const Subalgebra sub_a = car::regional_subalgebra(rep, cert.region_a);
  const Subalgebra sub_c = cert.pair == PairKind::Car
                               ? car::regional_subalgebra(rep, cert.region_c)
                               : car::twisted_subalgebra(rep, cert.region_c, cert.region_a);
  for (std::size_t i = 0; i < cert.decomposition.size(); ++i) {
    const double defect =
        max_product_defect(rep, cert.decomposition[i].rho_ac, sub_a, sub_c);
    if (defect > 1e-9) {
      throw ComponentNotProduct("component " + std::to_string(i) +
                                " is not a product for " + cert.pair_label());
    }
  }
  return true;
}

report::json to_json(const SeparabilityCertificate& cert) {
  report::json j;
  j["pair"] = cert.pair_label();
  j["witness_value"] = cert.witness_value;
  if (cert.ppt_min) j["ppt_min_eigenvalue"] = *cert.ppt_min;
  switch (cert.verdict) {
    case SeparabilityVerdict::Separable: j["verdict"] = "separable"; break;
    case SeparabilityVerdict::Nonseparable: j["verdict"] = "nonseparable"; break;
    case SeparabilityVerdict::Undecided: j["verdict"] = "undecided"; break;
  }
  j["components"] = report::json::array();
  for (const auto& c : cert.decomposition) {
    report::json comp;
    comp["weight"] = c.weight;
    comp["rho_ac"] = report::matrix_to_json(c.rho_ac);
    j["components"].push_back(std::move(comp));
  }
  return j;
}

ProductCheckResult product_check(const FockRep& rep, const StateDensity& omega,
                                 const Region& region_a, const Region& region_c) {
  if (!region_a.disjoint_from(region_c)) {
    throw OverlappingRegions("product check requires disjoint regions");
  }
  const Subalgebra sub_a = car::regional_subalgebra(rep, region_a);
  const Subalgebra sub_c = car::regional_subalgebra(rep, region_c);
  const Subalgebra sub_ac = car::regional_subalgebra(rep, region_a.union_with(region_c));

  ProductCheckResult out;
  out.is_product = max_product_defect(rep, omega.rho, sub_a, sub_c) <= 1e-9;
  out.additivity_residual = entropy::additivity_residual(omega, rep, region_a, region_c);

  const Matrix rho_a = states::conditional_expectation(sub_a, omega.rho);
  const Matrix rho_c = states::conditional_expectation(sub_c, omega.rho);
  const Matrix rho_ac = states::conditional_expectation(sub_ac, omega.rho);
  const Matrix sqrt_a = linalg::matrix_function(rho_a, linalg::MatrixFunc::Sqrt);
  const Matrix sqrt_c = linalg::matrix_function(rho_c, linalg::MatrixFunc::Sqrt);

  EvenOddAnalysis& an = out.analysis;
  const auto parts_a = car::even_odd_split(rep, sqrt_a);
  const auto parts_c = car::even_odd_split(rep, sqrt_c);
  an.a_plus = parts_a.even;
  an.a_minus = parts_a.odd;
  an.c_plus = parts_c.even;
  an.c_minus = parts_c.odd;

  an.recovery_cac_residual = rep.tau_norm(sqrt_c * rho_a * sqrt_c - rho_ac);
  an.recovery_aca_residual = rep.tau_norm(sqrt_a * rho_c * sqrt_a - rho_ac);
  an.even_cross_residual = rep.tau_norm(an.a_plus * an.a_minus * an.c_plus * an.c_minus -
                                        an.a_minus * an.a_plus * an.c_minus * an.c_plus);
  an.odd_a_residual = rep.tau_norm(an.a_minus * an.a_minus *
                                   (an.c_plus * an.c_minus + an.c_minus * an.c_plus));
  an.odd_c_residual = rep.tau_norm((an.a_plus * an.a_minus + an.a_minus * an.a_plus) *
                                   (an.c_minus * an.c_minus));
  an.odd_norm_a = car::odd_part_norm(rep, rho_a);
  an.odd_norm_c = car::odd_part_norm(rep, rho_c);

  const bool a_even = an.odd_norm_a <= 1e-6;
  const bool c_even = an.odd_norm_c <= 1e-6;
  if (a_even && c_even)
    an.even_verdict = EvenVerdict::BothEven;
  else if (a_even)
    an.even_verdict = EvenVerdict::AEven;
  else if (c_even)
    an.even_verdict = EvenVerdict::CEven;
  else
    an.even_verdict = EvenVerdict::Neither;

  return out;
}

}  // namespace fentropy::separability
