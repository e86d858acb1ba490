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

#include "fentropy/rng.hpp"
#include "fentropy/scenarios.hpp"

using namespace fentropy;
using scenarios::ScenarioConfig;

TEST_CASE("counterexample scenario passes and reports the witness") {
  ScenarioConfig cfg;
  cfg.scenario = "counterexample";
  cfg.lambda = 1.0;
  cfg.seed = 7;
  const auto result = scenarios::run_scenario(cfg);
  CHECK(result.exit_code() == 0);

  bool witness_found = false;
  for (const auto& a : result.assertions) {
    if (a.name == "hopping_witness") {
      witness_found = true;
      CHECK(a.value == doctest::Approx(0.125).epsilon(1e-12));
    }
    CHECK(a.pass);
  }
  CHECK(witness_found);

  // The embedded twisted-pair density round-trips through the codec with
  // bit-identical values.
  const auto j = scenarios::scenario_report(result);
  REQUIRE(j.contains("matrices"));
  const auto m = report::matrix_from_json(j["matrices"]["twisted_pair_density"]);
  const auto again = report::matrix_to_json(m);
  CHECK(again.dump() == j["matrices"]["twisted_pair_density"].dump());
  // Witness value 1/8 sits on the diagonal sum: Tr = 1.
  CHECK(std::abs(m.trace().real() - 1.0) <= 1e-12);
}

TEST_CASE("invalid configurations are rejected") {
  ScenarioConfig cfg;
  cfg.scenario = "counterexample";
  cfg.lambda = 2.0;
  CHECK_THROWS_AS(scenarios::run_scenario(cfg), ConfigError);

  cfg.lambda = 1.0;
  cfg.scenario = "no-such-scenario";
  CHECK_THROWS_AS(scenarios::run_scenario(cfg), ConfigError);

  cfg.scenario = "ssa-sweep";
  cfg.modes = {1, 1};
  CHECK_THROWS_AS(scenarios::run_scenario(cfg), ConfigError);

  cfg.modes = {5, 5, 5};
  CHECK_THROWS_AS(scenarios::run_scenario(cfg), ConfigError);

  cfg.scenario = "counterexample";
  cfg.modes = {1, 2, 1};  // geometry is pinned to 1+3+1
  CHECK_THROWS_AS(scenarios::run_scenario(cfg), ConfigError);
}

TEST_CASE("assertion failures exit with code 1") {
  ScenarioConfig cfg;
  cfg.scenario = "ssa-sweep";
  cfg.trials = 8;
  cfg.tol["ssa_residual"] = -10.0;  // unsatisfiable threshold
  const auto result = scenarios::run_scenario(cfg);
  CHECK_FALSE(result.all_pass());
  CHECK(result.exit_code() == 1);
}

TEST_CASE("scenario reports are deterministic") {
  ScenarioConfig cfg;
  cfg.scenario = "additivity-product";
  cfg.trials = 24;
  cfg.seed = 99;
  const auto r1 = scenarios::run_scenario(cfg);
  const auto r2 = scenarios::run_scenario(cfg);
  const auto j1 = scenarios::scenario_report(r1);
  const auto j2 = scenarios::scenario_report(r2);
  CHECK(j1["assertions"].dump() == j2["assertions"].dump());
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("report document shape") {
  const report::json doc = report::make_report("demo", report::json::object(), {});
  CHECK(doc["scenario"] == "demo");
  CHECK(doc["version"] == report::kVersion);
  CHECK(doc["assertions"].is_array());
  CHECK(doc["assertions"].empty());
  CHECK_FALSE(doc.contains("matrices"));

  const std::vector<report::Assertion> assertions = {
      {"alpha", 0.5, 1.0, true},
      {"beta", 2.0, 1.0, false},
  };
  const std::string csv = report::to_csv(assertions);
  CHECK(csv == "name,value,threshold,pass\nalpha,0.5,1.0,true\nbeta,2.0,1.0,false\n");
}

TEST_CASE("matrix codec round trip on random data") {
  Rng rng(2718);
  linalg::Matrix m(3, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = rng.complex_normal();
  const auto j = report::matrix_to_json(m);
  const auto back = report::matrix_from_json(j);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 5);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 5; ++c) {
      CHECK(back(i, c).real() == m(i, c).real());
      CHECK(back(i, c).imag() == m(i, c).imag());
    }
}

TEST_CASE("small smoke runs of the sweep scenarios") {
  for (const char* name : {"ssa-sweep", "entropy-identities", "markov-equivalence",
                           "additivity-product"}) {
    ScenarioConfig cfg;
    cfg.scenario = name;
    cfg.trials = 12;
    cfg.seed = 5;
    const auto result = scenarios::run_scenario(cfg);
    for (const auto& a : result.assertions) {
      INFO(name, ": ", a.name, " value=", a.value, " threshold=", a.threshold);
      CHECK(a.pass);
    }
  }
}
