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

#include "fentropy/markov.hpp"

#include <algorithm>
#include <cmath>

namespace fentropy::markov {

using linalg::cplx;

Matrix hopping_operator(const FockRep& rep, const Matrix& k_a, const Region& region_a,
                        const Matrix& k_c, const Region& region_c) {
  if (!region_a.disjoint_from(region_c)) {
    throw OverlappingRegions("hopping operator regions must be disjoint");
  }
  if (rep.tau_norm(car::even_odd_split(rep, k_a).even) > 1e-10) {
    throw NotOdd("k_A must be odd");
  }
  if (rep.tau_norm(car::even_odd_split(rep, k_c).even) > 1e-10) {
    throw NotOdd("k_C must be odd");
  }
  const Subalgebra sub_a = car::regional_subalgebra(rep, region_a);
  const Subalgebra sub_c = car::regional_subalgebra(rep, region_c);
  if (rep.tau_norm(states::conditional_expectation(sub_a, k_a) - k_a) > 1e-8 ||
      rep.tau_norm(states::conditional_expectation(sub_c, k_c) - k_c) > 1e-8) {
    throw Error("hopping operator inputs not supported on their regions");
  }
  if (linalg::operator_norm(k_a) > 1.0 + 1e-10 || linalg::operator_norm(k_c) > 1.0 + 1e-10) {
    throw NormTooLarge("hopping operator inputs must have norm <= 1");
  }
  return (k_a.adjoint() * k_c - k_a * k_c.adjoint()) * 0.5;
}

Matrix PetzPair::alpha(const Subalgebra& ab, const Matrix& x) const {
  const Matrix inner = rho_bc_sqrt * x * rho_bc_sqrt;
  return rho_b_inv_sqrt * states::conditional_expectation(ab, inner) * rho_b_inv_sqrt;
}

Matrix PetzPair::t_sharp(const Matrix& x) const {
  return rho_bc_sqrt * rho_b_inv_sqrt * x * rho_b_inv_sqrt * rho_bc_sqrt;
}

PetzPair petz_maps(const StateDensity& psi, const Triple& triple, SingularPolicy policy) {
  if (!triple.square.pass) {
    throw TripleNotCommutingSquare("Petz maps need a verified commuting square");
  }
  PetzPair pair;
  pair.triple_label = triple.label;
  pair.rho_b = states::conditional_expectation(triple.b, psi.rho);
  pair.rho_bc = states::conditional_expectation(triple.bc, psi.rho);

  if (policy == SingularPolicy::Throw) {
    for (const Matrix* m : {&pair.rho_b, &pair.rho_bc}) {
      const auto eig = linalg::hermitian_eig(*m);
      const double tol = linalg::default_support_tol(m->rows(), eig.eigenvalues);
      if (eig.eigenvalues.front() < tol) {
        throw SingularDensity("restricted density is rank deficient");
      }
    }
  }
  pair.rho_b_inv_sqrt = linalg::matrix_function(pair.rho_b, linalg::MatrixFunc::InvSqrt);
  pair.rho_bc_sqrt = linalg::matrix_function(pair.rho_bc, linalg::MatrixFunc::Sqrt);
  return pair;
}

namespace {

Region region_difference(const Region& whole, const Region& part) {
  std::vector<int> out;
  for (int m : whole.modes)
    if (!part.contains(m)) out.push_back(m);
  return Region(out);
}

}  // namespace

MarkovReport markov_report(const FockRep& rep, const StateDensity& psi, const Triple& triple,
                           double residual_tol, double recovery_tol) {
  MarkovReport out;
  out.triple_label = triple.label;
  out.is_even = car::odd_part_norm(rep, psi.rho) <= 1e-10;

  out.ssa_residual = entropy::ssa_residual(psi, triple).residual;

  const PetzPair pair = petz_maps(psi, triple);
  const Matrix rho_ab = states::conditional_expectation(triple.ab, psi.rho);
  out.recovery_error = states::tau_trace_distance(pair.t_sharp(rho_ab), psi.rho);
  out.tsharp_identity_error = states::tau_trace_distance(pair.t_sharp(pair.rho_b), pair.rho_bc);

  // Fixed points of alpha: all of A_A for twisted triples (A_A commutes with
  // the twisted B and BC subalgebras outright) and for even states; the even
  // part of A_A otherwise. For rank-deficient r_B the support-restricted
  // alpha can only fix elements up to the support projector P_B, so the
  // defect is measured against e P_B; for faithful states P_B = 1 and this
  // is the plain fixed-point statement.
  const Region region_a = region_difference(triple.ab.region, triple.b.region);
  const Subalgebra sub_a = car::regional_subalgebra(rep, region_a);
  const bool full_basis = out.is_even || triple.bc.kind == car::SubalgebraKind::Twisted;

  const auto eig_b = linalg::hermitian_eig(pair.rho_b);
  const double tol_b = linalg::default_support_tol(rep.dim(), eig_b.eigenvalues);
  Matrix support_b(rep.dim(), rep.dim());
  for (int k = 0; k < rep.dim(); ++k) {
    if (eig_b.eigenvalues[k] <= tol_b) continue;
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j)
        support_b(i, j) += eig_b.eigenvectors(i, k) * std::conj(eig_b.eigenvectors(j, k));
  }
  for (std::size_t k = 0; k < sub_a.basis.size(); ++k) {
    if (!full_basis && !sub_a.even_mask[k]) continue;
    const Matrix& e = sub_a.basis[k];
    out.fixed_point_error = std::max(
        out.fixed_point_error,
        rep.tau_norm((pair.alpha(triple.ab, e) - e) * support_b));
  }

  out.verdict_by_residual = std::abs(out.ssa_residual) <= residual_tol;
  out.verdict_by_recovery = out.recovery_error <= recovery_tol;
  out.verdict = out.verdict_by_residual && out.verdict_by_recovery;
  return out;
}

report::json to_json(const MarkovReport& r) {
  report::json j;
  j["triple"] = r.triple_label;
  j["ssa_residual"] = r.ssa_residual;
  j["recovery_error"] = r.recovery_error;
  j["fixed_point_error"] = r.fixed_point_error;
  j["tsharp_identity_error"] = r.tsharp_identity_error;
  j["is_even"] = r.is_even;
  j["verdict_by_residual"] = r.verdict_by_residual;
  j["verdict_by_recovery"] = r.verdict_by_recovery;
  j["verdict"] = r.verdict;
  return j;
}

report::json to_json(const CounterexampleSpec& spec) {
  report::json j;
  j["lambda"] = spec.lambda;
  j["region_a"] = spec.region_a.to_string();
  j["region_b"] = spec.region_b.to_string();
  j["region_c"] = spec.region_c.to_string();
  j["hopping"] = report::matrix_to_json(spec.hopping);
  j["components"] = report::json::array();
  for (const auto& c : spec.components) {
    report::json comp;
    comp["weight"] = c.weight;
    comp["rho_ac"] = report::matrix_to_json(c.rho_ac);
    comp["projection"] = report::matrix_to_json(c.projection);
    j["components"].push_back(std::move(comp));
  }
  return j;
}

CounterexampleResult counterexample(const FockRep& rep, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw LambdaOutOfRange("lambda must lie in (0, 1]");
  }
  if (rep.n_modes() != 5) {
    throw Error("counterexample uses the fixed 1+3+1 geometry on 5 modes");
  }
  const Region region_a{1};
  const Region region_b{2, 3, 4};
  const Region region_c{5};
  const int d = rep.dim();

  CounterexampleSpec spec;
  spec.lambda = lambda;
  spec.region_a = region_a;
  spec.region_b = region_b;
  spec.region_c = region_c;
  spec.k_a = rep.annihilator(1);
  spec.k_c = rep.annihilator(5);
  spec.hopping = hopping_operator(rep, spec.k_a, region_a, spec.k_c, region_c);

  const Matrix one = Matrix::identity(d);
  const Matrix rho_lambda_mat = one + spec.hopping * lambda;

  // Spin-direction operators of the commuting pair (A_A, A^~_C): x/y on the
  // A mode and their images under the Jordan-Wigner twist on the C mode.
  const Matrix v_a = car::region_unitary(rep, region_a);
  const Matrix a1 = rep.annihilator(1);
  const Matrix a5 = rep.annihilator(5);
  const Matrix x_a = a1 + a1.adjoint();
  const Matrix y_a = (a1.adjoint() - a1) * cplx(0.0, 1.0);
  const Matrix x_c = v_a * (a5 + a5.adjoint());
  const Matrix y_c = v_a * ((a5.adjoint() - a5) * cplx(0.0, 1.0));

  // Four pure twisted-pair products with anti-aligned spin directions plus
  // the tracial component. Their lambda/8-weighted mixture reproduces
  // 1 + lambda K exactly.
  std::vector<Matrix> ac_parts;
  ac_parts.push_back((one + x_a) * (one - x_c));
  ac_parts.push_back((one - x_a) * (one + x_c));
  ac_parts.push_back((one + y_a) * (one - y_c));
  ac_parts.push_back((one - y_a) * (one + y_c));
  ac_parts.push_back(one);

  const std::vector<double> weights = {lambda / 8.0, lambda / 8.0, lambda / 8.0, lambda / 8.0,
                                       1.0 - lambda / 2.0};

  // Five orthogonal even projections on B: the first five number-basis
  // diagonal projections of the three B modes.
  Matrix omega(d, d);
  for (int i = 0; i < 5; ++i) {
    Matrix p(d, d);
    for (int idx = 0; idx < d; ++idx) {
      const int b_index = (idx >> 1) & 7;  // bits of modes 2,3,4
      if (b_index == i) p(idx, idx) = 1.0;
    }
    const double tau_p = rep.tau(p).real();
    const StateDensity comp_ac = states::make_state(rep, ac_parts[i]);
    const StateDensity comp_b = states::make_state(rep, p * (1.0 / tau_p));
    const StateDensity extended = states::product_extension(
        rep, comp_ac, region_a.union_with(region_c), comp_b, region_b);
    omega += extended.rho * weights[i];
    spec.components.push_back({weights[i], ac_parts[i], p});
  }

  CounterexampleResult result;
  result.omega_abc = states::make_state(rep, std::move(omega));
  result.rho_lambda = states::make_state(rep, rho_lambda_mat);
  result.spec = std::move(spec);
  return result;
}

}  // namespace fentropy::markov
