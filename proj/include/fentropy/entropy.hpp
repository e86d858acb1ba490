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

#include "fentropy/states.hpp"

namespace fentropy::entropy {

using states::StateDensity;
using states::Subalgebra;
using states::Triple;

/// Entropy relative to the tracial state: -tau(rho log rho), natural log,
/// 0 log 0 = 0. Ranges over [-n log 2, 0].
double entropy_hat(const StateDensity& phi);

/// The usual von Neumann entropy -Tr(D log D) of the density matrix
/// D = rho / 2^n; equals entropy_hat + n log 2.
double entropy_vn(const StateDensity& phi);

/// Relative entropy tau(rho1 (log rho1 - log rho2)) when the support of rho1
/// lies inside that of rho2 (kernel-projector overlap <= 1e-8), +infinity
/// otherwise.
double relative_entropy(const StateDensity& rho1, const StateDensity& rho2);

/// The four entropies of a strong-subadditivity instance and the residual
/// S_total - S_ab - S_bc + S_b (values are entropy_hat; the von Neumann
/// version has the same residual because the factor-dimension offsets
/// cancel over a commuting square of regional or twisted subalgebras).
struct EntropyReport {
  double s_total = 0.0;
  double s_ab = 0.0;
  double s_bc = 0.0;
  double s_b = 0.0;
  double residual = 0.0;
  std::string triple_label;
};

/// Strong subadditivity residual over a verified commuting-square triple;
/// the residual is <= 0 up to numerical slack. Throws
/// TripleNotCommutingSquare when the triple failed its square check.
EntropyReport ssa_residual(const StateDensity& psi, const Triple& triple);

/// S(psi_AC) - S(psi_A) - S(psi_C) for disjoint regional subalgebras;
/// <= 0 up to slack, and = 0 exactly for product states.
double additivity_residual(const StateDensity& psi, const car::FockRep& rep,
                           const car::Region& region_a, const car::Region& region_c);

report::json to_json(const EntropyReport& r);

}  // namespace fentropy::entropy
