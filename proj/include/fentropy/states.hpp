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

#include <cstdint>
#include <string>

#include "fentropy/car.hpp"
#include "fentropy/report.hpp"

namespace fentropy::states {

using car::FockRep;
using car::Matrix;
using car::Region;
using car::Subalgebra;
using linalg::cplx;

/// Density of a state with respect to the tracial state: rho >= 0 and
/// tau(rho) = Tr(rho)/2^n = 1. The usual density matrix is rho / 2^n.
struct StateDensity {
  int n_modes = 0;
  Matrix rho;

  int dim() const { return 1 << n_modes; }
};

/// Validates positivity (min eigenvalue >= -1e-10) and tau-normalization.
StateDensity make_state(const FockRep& rep, Matrix rho);

enum class StateKind { General, Even, GaugeInvariant, Pure };

/// Deterministic random density per seed. General states use the Ginibre
/// construction rho = G G^dag / tau(G G^dag); even states are
/// Theta-symmetrized; gauge-invariant states are number-block projected;
/// pure states are rescaled random vector projectors.
StateDensity random_state(const FockRep& rep, StateKind kind, std::uint64_t seed);

/// Tracial conditional expectation onto the subalgebra:
/// E_B(x) = sum_k tau(e_k^dag x) e_k over the orthonormal basis of B.
Matrix conditional_expectation(const Subalgebra& b, const Matrix& x);

/// Density of the restriction phi|_B, i.e. E_B(rho_phi), kept in the parent
/// space.
StateDensity restrict_state(const StateDensity& phi, const Subalgebra& b);

/// Product state extension of two states supported on disjoint regions.
/// Exists only when at least one marginal is even (odd part <= 1e-10);
/// otherwise throws BothMarginalsNoneven.
StateDensity product_extension(const FockRep& rep, const StateDensity& phi, const Region& region_i,
                               const StateDensity& psi, const Region& region_j);

/// eps * 1 + (1 - eps) * rho: faithful for eps > 0.
StateDensity regularize(const StateDensity& phi, double eps);

/// Trace distance in the tracial normalization, tau(|a - b|); equals the
/// standard density-matrix trace distance of the two states.
double tau_trace_distance(const Matrix& a, const Matrix& b);

/// Residuals of the five equivalent commuting-square conditions, each a max
/// deviation (tau-norm) over a spanning operator set:
///   (1) E_AB restricted to A_BC equals E_B;
///   (2) E_BC restricted to A_AB equals E_B;
///   (3) E_AB and E_BC commute and their composed image lies in A_B;
///   (4) E_AB E_BC = E_B;
///   (5) E_BC E_AB = E_B.
struct CommutingSquareReport {
  double residual[5] = {0, 0, 0, 0, 0};
  bool pass = false;

  double max_residual() const;
};

/// Checks the commuting-square conditions for the nested configuration
/// (A_AB, A_BC, A_B). Throws NotNested when A_B is not contained in both.
CommutingSquareReport commuting_square_check(const Subalgebra& ab, const Subalgebra& bc,
                                             const Subalgebra& b, double tol = 1e-10);

report::json to_json(const CommutingSquareReport& r);

/// JSON density payload: the tau-normalized matrix plus the mode count.
report::json to_json(const StateDensity& phi);
StateDensity state_from_json(const report::json& j);

/// A verified commuting-square triple. Factories run the full check once;
/// entropy/Markov routines refuse unverified triples.
struct Triple {
  Subalgebra ab;
  Subalgebra bc;
  Subalgebra b;
  std::string label;
  CommutingSquareReport square;
};

/// Regional triple (A_{A u B}, A_{B u C}, A_B) for pairwise disjoint regions.
Triple regional_triple(const FockRep& rep, const Region& a, const Region& b, const Region& c);

/// Twisted triple (A_{A u B}, A^~_{B u C}, A^~_B) with twist region A.
Triple twisted_triple(const FockRep& rep, const Region& a, const Region& b, const Region& c);

}  // namespace fentropy::states
