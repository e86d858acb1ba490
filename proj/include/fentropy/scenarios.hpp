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
#include <map>
#include <string>
#include <vector>

#include "fentropy/report.hpp"

namespace fentropy::scenarios {

/// Named deterministic verification scenarios:
///   ssa-sweep          strong subadditivity over random states
///   commuting-square   the five equivalent square conditions
///   entropy-identities tracial/von Neumann offsets and restriction identities
///   markov-equivalence strong additivity vs Petz recovery, state by state
///   counterexample     the nonseparable-marginal Markov state on 1+3+1 modes
///   additivity-product entropy additivity vs the product property on 1+1
std::vector<std::string> scenario_names();

struct ScenarioConfig {
  std::string scenario;
  std::vector<int> modes;  // per-region mode counts; empty selects the default
  double lambda = 1.0;
  std::uint64_t seed = 1;
  int trials = 0;  // 0 selects the scenario default
  std::map<std::string, double> tol;
  std::string out_path;
  std::string csv_path;

  double tol_or(const std::string& key, double fallback) const;
};

struct ScenarioResult {
  std::string scenario;
  report::json config_echo;
  std::vector<report::Assertion> assertions;
  report::json matrices;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Runs one scenario. Throws ConfigError on invalid configuration; assertion
/// failures are recorded in the result, not thrown.
ScenarioResult run_scenario(const ScenarioConfig& config);

report::json scenario_report(const ScenarioResult& result);

/// Writes the JSON report (and CSV summary when requested). Reports are
/// written for failing runs too.
void write_outputs(const ScenarioResult& result, const ScenarioConfig& config);

}  // namespace fentropy::scenarios
