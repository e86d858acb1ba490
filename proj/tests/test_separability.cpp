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

#include "fentropy/markov.hpp"
#include "fentropy/rng.hpp"
#include "fentropy/separability.hpp"

using namespace fentropy;
using car::FockRep;
using car::Matrix;
using car::Region;
using linalg::cplx;
using states::StateDensity;
using states::StateKind;

namespace {

StateDensity hopping_state(const FockRep& rep, double lambda, Matrix* k_out = nullptr) {
  const Matrix k = markov::hopping_operator(rep, rep.annihilator(1), Region{1},
                                            rep.annihilator(2), Region{2});
  if (k_out) *k_out = k;
  return states::make_state(rep, Matrix::identity(rep.dim()) + k * lambda);
}

StateDensity random_separable(const FockRep& rep, std::uint64_t seed) {
  const Region ra{1}, rc{2};
  const auto sub_a = car::regional_subalgebra(rep, ra);
  const auto sub_c = car::regional_subalgebra(rep, rc);
  Rng rng(seed);
  const int parts = 2 + static_cast<int>(rng.next_u64() % 3);
  Matrix rho(rep.dim(), rep.dim());
  std::vector<double> w(parts);
  double ws = 0.0;
  for (auto& x : w) {
    x = 0.2 + rng.uniform();
    ws += x;
  }
  for (int p = 0; p < parts; ++p) {
    const bool even_left = (rng.next_u64() & 1) != 0;
    const StateDensity a = even_left
        ? states::restrict_state(states::random_state(rep, StateKind::Even, seed * 31 + p), sub_a)
        : states::restrict_state(states::random_state(rep, StateKind::General, seed * 31 + p),
                                 sub_a);
    const StateDensity c = even_left
        ? states::restrict_state(
              states::random_state(rep, StateKind::General, seed * 37 + p), sub_c)
        : states::restrict_state(states::random_state(rep, StateKind::Even, seed * 37 + p),
                                 sub_c);
    rho += states::product_extension(rep, a, ra, c, rc).rho * (w[p] / ws);
  }
  return states::make_state(rep, std::move(rho));
}

}  // namespace

TEST_CASE("hopping witness values") {
  const FockRep rep(2);
  Matrix k;
  const StateDensity rho = hopping_state(rep, 1.0, &k);

  const StateDensity tracial{2, Matrix::identity(4)};
  CHECK(std::abs(separability::hopping_witness(tracial, k)) <= 1e-14);
  CHECK(separability::hopping_witness(rho, k) == doctest::Approx(0.125).epsilon(1e-13));

  const StateDensity half = hopping_state(rep, 0.5);
  CHECK(separability::hopping_witness(half, k) == doctest::Approx(0.0625).epsilon(1e-13));
}

TEST_CASE("hopping witness vanishes on CAR-separable states") {
  const FockRep rep(2);
  Matrix k;
  hopping_state(rep, 1.0, &k);
  for (int t = 0; t < 100; ++t) {
    const StateDensity sep = random_separable(rep, 9000 + t);
    CHECK(std::abs(separability::hopping_witness(sep, k)) <= 1e-9);
  }
}

TEST_CASE("twist image of the hopping state") {
  const FockRep rep(2);
  const StateDensity rho = hopping_state(rep, 1.0);
  const auto image = separability::jw_twist_image(rep, rho, Region{1}, Region{2});
  REQUIRE(image.rho.rows() == 4);

  // Oracle: (I - (XX + YY)/4)/4 with XX + YY = 2(|01><10| + |10><01|).
  Matrix expected = Matrix::identity(4) * 0.25;
  expected(1, 2) = -0.125;
  expected(2, 1) = -0.125;
  CHECK(linalg::distance(image.rho, expected, linalg::Norm::Frobenius) <= 1e-12);

  // The tracial state maps to the maximally mixed two-qubit state.
  const StateDensity tracial{2, Matrix::identity(4)};
  const auto mixed = separability::jw_twist_image(rep, tracial, Region{1}, Region{2});
  CHECK(linalg::distance(mixed.rho, Matrix::identity(4) * 0.25, linalg::Norm::Frobenius) <=
        1e-13);

  // Expectations of A_A elements are preserved.
  const StateDensity psi = states::random_state(rep, StateKind::General, 15);
  const auto im = separability::jw_twist_image(rep, psi, Region{1}, Region{2});
  const cplx before = rep.tau(psi.rho * rep.annihilator(1));
  const Matrix m2_lower(2, 2, {0, 1, 0, 0});
  const Matrix image_a1 = linalg::kron(m2_lower, Matrix::identity(2));
  CHECK(std::abs((im.rho * image_a1).trace() - before) <= 1e-10);

  CHECK_THROWS_AS(separability::jw_twist_image(rep, psi, Region{1, 2}, Region{2}),
                  UnsupportedSize);
}

TEST_CASE("partial transpose eigenvalues") {
  const FockRep rep(2);
  for (double lambda : {0.25, 0.5, 1.0}) {
    const StateDensity rho = hopping_state(rep, lambda);
    const auto image = separability::jw_twist_image(rep, rho, Region{1}, Region{2});
    const double min_eig = separability::ppt_min_eigenvalue(image);
    CHECK(min_eig == doctest::Approx((1.0 - lambda / 2.0) / 4.0).epsilon(1e-12));
    CHECK(min_eig > 0.0);
  }

  // Maximally entangled two-qubit state: min PT eigenvalue -1/2.
  Matrix bell(4, 4);
  const int idx[2] = {0, 3};
  for (int i : idx)
    for (int j : idx) bell(i, j) = 0.5;
  CHECK(separability::ppt_min_eigenvalue(bell, 2, 2) == doctest::Approx(-0.5).epsilon(1e-12));

  // Product pure state: partial transpose stays a state.
  Matrix prod(4, 4);
  prod(0, 0) = 1.0;
  CHECK(std::abs(separability::ppt_min_eigenvalue(prod, 2, 2)) <= 1e-13);

  CHECK_THROWS_AS(separability::ppt_min_eigenvalue(bell, 3, 2), BadSplit);
}

TEST_CASE("decomposition verification for the counterexample") {
  const FockRep rep(5);
  const markov::CounterexampleResult cx = markov::counterexample(rep, 1.0);

  separability::SeparabilityCertificate cert;
  cert.pair = separability::PairKind::Twisted;
  cert.region_a = Region{1};
  cert.region_c = Region{5};
  for (const auto& c : cx.spec.components) cert.decomposition.push_back({c.weight, c.rho_ac});

  CHECK(separability::verify_decomposition(rep, cert, cx.rho_lambda));

  // The same components do not factorize for the plain CAR pair.
  separability::SeparabilityCertificate car_cert = cert;
  car_cert.pair = separability::PairKind::Car;
  CHECK_THROWS_AS(separability::verify_decomposition(rep, car_cert, cx.rho_lambda),
                  ComponentNotProduct);

  // Corrupted weights fail reconstruction.
  separability::SeparabilityCertificate broken = cert;
  broken.decomposition[0].weight += 0.05;
  CHECK_THROWS_AS(separability::verify_decomposition(rep, broken, cx.rho_lambda),
                  ReconstructionFailed);

  // A single tracial component is a product for either pair.
  separability::SeparabilityCertificate tracial;
  tracial.pair = separability::PairKind::Car;
  tracial.region_a = Region{1};
  tracial.region_c = Region{5};
  tracial.decomposition.push_back({1.0, Matrix::identity(rep.dim())});
  const StateDensity tr{5, Matrix::identity(rep.dim())};
  CHECK(separability::verify_decomposition(rep, tracial, tr));
  tracial.pair = separability::PairKind::Twisted;
  CHECK(separability::verify_decomposition(rep, tracial, tr));
}

TEST_CASE("certificate classification") {
  separability::SeparabilityCertificate cert;
  cert.region_a = Region{1};
  cert.region_c = Region{2};

  cert.pair = separability::PairKind::Car;
  cert.witness_value = 0.125;
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Nonseparable);

  cert.witness_value = 0.0;
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Undecided);

  // A decomposition certifies separability for its pair.
  cert.decomposition.push_back({1.0, Matrix::identity(4)});
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Separable);
  cert.decomposition.clear();

  // PPT is a complete criterion only on the 2x2 twisted pair.
  cert.pair = separability::PairKind::Twisted;
  cert.ppt_min = 0.125;
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Separable);
  cert.ppt_min = -0.5;
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Nonseparable);
  cert.ppt_min = 0.125;
  cert.region_a = Region{1, 2};
  CHECK(separability::classify_certificate(cert) ==
        separability::SeparabilityVerdict::Undecided);
}

TEST_CASE("certificate serialization") {
  separability::SeparabilityCertificate cert;
  cert.pair = separability::PairKind::Car;
  cert.region_a = Region{1};
  cert.region_c = Region{2};
  cert.witness_value = 0.125;
  cert.verdict = separability::SeparabilityVerdict::Nonseparable;
  const auto j = separability::to_json(cert);
  CHECK(j["pair"] == "car({1},{2})");
  CHECK(j["witness_value"].get<double>() == 0.125);
  CHECK(j["verdict"] == "nonseparable");
  CHECK_FALSE(j.contains("ppt_min_eigenvalue"));
  CHECK(j["components"].empty());
}

TEST_CASE("product check on products and on the hopping state") {
  const FockRep rep(2);
  const Region ra{1}, rc{2};
  const auto sub_a = car::regional_subalgebra(rep, ra);
  const auto sub_c = car::regional_subalgebra(rep, rc);

  // Even (x) general product: additive, product, and the even marginal is
  // detected; the even square root has no odd part.
  const StateDensity phi =
      states::restrict_state(states::random_state(rep, StateKind::Even, 71), sub_a);
  const StateDensity psi =
      states::restrict_state(states::random_state(rep, StateKind::General, 72), sub_c);
  const StateDensity prod = states::product_extension(rep, phi, ra, psi, rc);
  const auto pc = separability::product_check(rep, prod, ra, rc);
  CHECK(pc.is_product);
  CHECK(std::abs(pc.additivity_residual) <= 1e-10);
  CHECK((pc.analysis.even_verdict == separability::EvenVerdict::AEven ||
         pc.analysis.even_verdict == separability::EvenVerdict::BothEven));
  CHECK(rep.tau_norm(pc.analysis.a_minus) <= 1e-10);
  CHECK(pc.analysis.recovery_cac_residual <= 1e-9);
  CHECK(pc.analysis.recovery_aca_residual <= 1e-9);
  CHECK(pc.analysis.even_cross_residual <= 1e-9);
  CHECK(pc.analysis.odd_a_residual <= 1e-9);
  CHECK(pc.analysis.odd_c_residual <= 1e-9);

  // Hopping state: not product, strictly negative residual, neither marginal
  // forced even... both marginals are tracial here, hence even; the failure
  // is in the product property itself.
  const StateDensity rho = hopping_state(rep, 1.0);
  const auto pch = separability::product_check(rep, rho, ra, rc);
  CHECK_FALSE(pch.is_product);
  CHECK(pch.additivity_residual < -0.05);

  CHECK_THROWS_AS(separability::product_check(rep, rho, Region{1}, Region{1}),
                  OverlappingRegions);
}

TEST_CASE("product check equivalence on a random sweep") {
  const FockRep rep(2);
  const Region ra{1}, rc{2};
  for (int t = 0; t < 40; ++t) {
    StateDensity psi{0, Matrix()};
    if (t % 3 == 0) {
      psi = random_separable(rep, 400 + t);
    } else {
      psi = states::random_state(rep, t % 3 == 1 ? StateKind::General : StateKind::Even,
                                 400 + t);
    }
    const auto pc = separability::product_check(rep, psi, ra, rc);
    const bool additive = std::abs(pc.additivity_residual) <= 1e-8;
    CHECK(additive == pc.is_product);
    if (pc.is_product) {
      CHECK(std::min(pc.analysis.odd_norm_a, pc.analysis.odd_norm_c) <= 1e-6);
      CHECK(pc.analysis.even_cross_residual <= 1e-6);
      CHECK(pc.analysis.odd_a_residual <= 1e-6);
      CHECK(pc.analysis.odd_c_residual <= 1e-6);
    }
  }
}
