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

#include "fentropy/entropy.hpp"

#include <cmath>
#include <limits>

namespace fentropy::entropy {

using car::Matrix;
using linalg::cplx;

namespace {

// -sum w(lambda) over the spectrum with the stated weight function, kernel
// eigenvalues contributing 0.
double spectral_entropy(const StateDensity& phi, bool tracial_weights) {
  const auto eig = linalg::hermitian_eig(phi.rho);
  const double tol = linalg::default_support_tol(phi.dim(), eig.eigenvalues);
  const double dim = phi.dim();
  double s = 0.0;
  for (double lam : eig.eigenvalues) {
    if (lam <= tol) continue;
    if (tracial_weights) {
      s -= (lam / dim) * std::log(lam);
    } else {
      const double d = lam / dim;
      s -= d * std::log(d);
    }
  }
  return s;
}

}  // namespace

double entropy_hat(const StateDensity& phi) { return spectral_entropy(phi, true); }

double entropy_vn(const StateDensity& phi) { return spectral_entropy(phi, false); }

double relative_entropy(const StateDensity& rho1, const StateDensity& rho2) {
  if (rho1.dim() != rho2.dim()) throw DimensionMismatch("relative entropy: dimension mismatch");
  const int dim = rho1.dim();

  const auto eig2 = linalg::hermitian_eig(rho2.rho);
  const double tol2 = linalg::default_support_tol(dim, eig2.eigenvalues);

  // Kernel projector of rho2; overlap with rho1 detects support violation.
  Matrix kernel(dim, dim);
  for (int k = 0; k < dim; ++k) {
    if (eig2.eigenvalues[k] > tol2) continue;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        kernel(i, j) += eig2.eigenvectors(i, k) * std::conj(eig2.eigenvectors(j, k));
  }
  const double overlap = (linalg::hs_inner(kernel, rho1.rho) / static_cast<double>(dim)).real();
  if (overlap > 1e-8) return std::numeric_limits<double>::infinity();

  const Matrix log1 = linalg::matrix_function(rho1.rho, linalg::MatrixFunc::Log);
  const Matrix log2 = linalg::matrix_function(rho2.rho, linalg::MatrixFunc::Log);
  const cplx val = linalg::hs_inner(rho1.rho, log1 - log2) / static_cast<double>(dim);
  return val.real();
}

EntropyReport ssa_residual(const StateDensity& psi, const Triple& triple) {
  if (!triple.square.pass) {
    throw TripleNotCommutingSquare("triple failed the commuting-square check");
  }
  EntropyReport out;
  out.triple_label = triple.label;
  out.s_total = entropy_hat(psi);
  out.s_ab = entropy_hat(states::restrict_state(psi, triple.ab));
  out.s_bc = entropy_hat(states::restrict_state(psi, triple.bc));
  out.s_b = entropy_hat(states::restrict_state(psi, triple.b));
  out.residual = out.s_total - out.s_ab - out.s_bc + out.s_b;
  return out;
}

report::json to_json(const EntropyReport& r) {
  report::json j;
  j["triple"] = r.triple_label;
  j["s_total"] = r.s_total;
  j["s_ab"] = r.s_ab;
  j["s_bc"] = r.s_bc;
  j["s_b"] = r.s_b;
  j["residual"] = r.residual;
  return j;
}

double additivity_residual(const StateDensity& psi, const car::FockRep& rep,
                           const car::Region& region_a, const car::Region& region_c) {
  if (!region_a.disjoint_from(region_c)) {
    throw OverlappingRegions("additivity residual requires disjoint regions");
  }
  const Subalgebra sub_a = car::regional_subalgebra(rep, region_a);
  const Subalgebra sub_c = car::regional_subalgebra(rep, region_c);
  const Subalgebra sub_ac = car::regional_subalgebra(rep, region_a.union_with(region_c));
  // The von Neumann offsets log d_AC - log d_A - log d_C cancel, so the
  // tracial entropies give the same residual.
  const double s_ac = entropy_hat(states::restrict_state(psi, sub_ac));
  const double s_a = entropy_hat(states::restrict_state(psi, sub_a));
  const double s_c = entropy_hat(states::restrict_state(psi, sub_c));
  return s_ac - s_a - s_c;
}

}  // namespace fentropy::entropy
