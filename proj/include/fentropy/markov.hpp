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

#include "fentropy/entropy.hpp"

namespace fentropy::markov {

using car::FockRep;
using car::Matrix;
using car::Region;
using car::Subalgebra;
using states::StateDensity;
using states::Triple;

/// Fermion-hopping operator K = (k_A^dag k_C - k_A k_C^dag) / 2 between odd
/// elements of two disjoint regions. Self-adjoint, even, with ||K|| <= 1
/// when both inputs have norm <= 1. Throws NotOdd / NormTooLarge /
/// OverlappingRegions on bad inputs.
Matrix hopping_operator(const FockRep& rep, const Matrix& k_a, const Region& region_a,
                        const Matrix& k_c, const Region& region_c);

enum class SingularPolicy { SupportRestricted, Throw };

/// The state-dependent conditional expectation alpha and its tracial dual
/// T# for a commuting-square triple:
///   alpha(x) = r_B^{-1/2} E_AB(r_BC^{1/2} x r_BC^{1/2}) r_B^{-1/2}
///   T#(x)    = r_BC^{1/2} r_B^{-1/2} x r_B^{-1/2} r_BC^{1/2}
/// with r_B, r_BC the restricted densities of the source state. Inverse
/// square roots are support-restricted; with SingularPolicy::Throw a rank
/// deficient r_B or r_BC raises SingularDensity instead.
struct PetzPair {
  Matrix rho_b;
  Matrix rho_bc;
  Matrix rho_b_inv_sqrt;
  Matrix rho_bc_sqrt;
  std::string triple_label;

  Matrix alpha(const Subalgebra& ab, const Matrix& x) const;
  Matrix t_sharp(const Matrix& x) const;
};

PetzPair petz_maps(const StateDensity& psi, const Triple& triple,
                   SingularPolicy policy = SingularPolicy::SupportRestricted);

/// Markov verification record. The verdict demands both the vanishing
/// strong-subadditivity residual and exact Petz recovery; the two criteria
/// are equivalent and the report keeps them separate so the equivalence can
/// be checked state by state. fixed_point_error is measured over a full
/// basis of A_A when the state is even or the triple twisted, and over the
/// even part of A_A otherwise.
struct MarkovReport {
  double ssa_residual = 0.0;
  double recovery_error = 0.0;
  double fixed_point_error = 0.0;
  double tsharp_identity_error = 0.0;  // ||T#(r_B) - r_BC||, holds for every state
  bool is_even = false;
  bool verdict_by_residual = false;
  bool verdict_by_recovery = false;
  bool verdict = false;
  std::string triple_label;
};

MarkovReport markov_report(const FockRep& rep, const StateDensity& psi, const Triple& triple,
                           double residual_tol = 1e-8, double recovery_tol = 1e-8);

/// One component of the counterexample decomposition: a product state for
/// the twisted pair (A_A, A^~_C) on A u C, together with the even projection
/// whose normalized state is attached on B.
struct CounterexampleComponent {
  double weight = 0.0;
  Matrix rho_ac;
  Matrix projection;
};

struct CounterexampleSpec {
  double lambda = 0.0;
  Matrix k_a;
  Matrix k_c;
  Matrix hopping;
  Region region_a, region_b, region_c;
  std::vector<CounterexampleComponent> components;
};

struct CounterexampleResult {
  StateDensity omega_abc;
  StateDensity rho_lambda;  // density 1 + lambda K on A u C
  CounterexampleSpec spec;
};

report::json to_json(const MarkovReport& r);
report::json to_json(const CounterexampleSpec& spec);

/// The nonseparable-marginal Markov state on 1+3+1 modes: rho_lambda =
/// 1 + lambda K on A u C (k_A = a_1, k_C = a_5) is decomposed into five
/// components, each a product state for the twisted pair (A_A, A^~_C) --
/// four pure spin-direction products from the Jordan-Wigner image plus the
/// tracial state, with weights (lambda/8 x4, 1 - lambda/2) -- and each
/// component is product-extended with the normalized state of one of five
/// orthogonal even number-basis projections on B. The result restricts back
/// to rho_lambda on A u C and is Markov for the twisted triple
/// (A_AB, A^~_BC, A^~_B). Throws LambdaOutOfRange unless 0 < lambda <= 1.
CounterexampleResult counterexample(const FockRep& rep, double lambda);

}  // namespace fentropy::markov
