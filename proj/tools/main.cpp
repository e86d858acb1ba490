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

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fentropy/scenarios.hpp"

namespace {

std::vector<int> parse_modes(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::stoi(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

void write_error_report(const std::string& path, const std::string& scenario,
                        const std::string& message) {
  fentropy::report::json j;
  j["scenario"] = scenario;
  j["version"] = fentropy::report::kVersion;
  j["error"] = message;
  j["assertions"] = fentropy::report::json::array();
  fentropy::report::write_text_file(path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy and Markov-property verification for fermionic lattice systems"};

  fentropy::scenarios::ScenarioConfig cfg;
  std::string modes_text;
  std::vector<std::string> tol_args;

  app.add_option("--scenario", cfg.scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember(fentropy::scenarios::scenario_names()));
  app.add_option("--modes", modes_text, "Comma-separated mode counts per region, e.g. 1,3,1");
  app.add_option("--lambda", cfg.lambda, "Hopping strength in (0, 1]");
  app.add_option("--seed", cfg.seed, "Base seed for random states");
  app.add_option("--trials", cfg.trials, "Number of random trials (0 = scenario default)");
  app.add_option("--tol", tol_args, "Tolerance override key=value (repeatable)");
  app.add_option("--out", cfg.out_path, "Write the JSON report to this path");
  app.add_option("--csv", cfg.csv_path, "Write a CSV assertion summary to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!modes_text.empty()) cfg.modes = parse_modes(modes_text);
    for (const std::string& kv : tol_args) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw fentropy::ConfigError("bad --tol argument: " + kv);
      cfg.tol[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }

    const auto result = fentropy::scenarios::run_scenario(cfg);
    fentropy::scenarios::write_outputs(result, cfg);

    for (const auto& a : result.assertions) {
      std::printf("[%s] %-36s value=%.6g threshold=%.6g\n", a.pass ? "PASS" : "FAIL",
                  a.name.c_str(), a.value, a.threshold);
    }
    std::printf("%s: %s\n", cfg.scenario.c_str(), result.all_pass() ? "PASS" : "FAIL");
    return result.exit_code();
  } catch (const fentropy::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    if (!cfg.out_path.empty()) write_error_report(cfg.out_path, cfg.scenario, e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    if (!cfg.out_path.empty()) write_error_report(cfg.out_path, cfg.scenario, e.what());
    return 2;
  }
}
