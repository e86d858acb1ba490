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

#include <json.hpp>

#include "fentropy/linalg.hpp"

namespace fentropy::report {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// One named check: pass means |value| (or the scenario's chosen comparison)
/// stayed within threshold.
struct Assertion {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

json assertion_to_json(const Assertion& a);

/// Complex matrix codec: row-major [[re, im], ...] with declared shape.
json matrix_to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const json& j);

/// Report document: { scenario, config, version, assertions, matrices? }.
json make_report(const std::string& scenario, const json& config,
                 const std::vector<Assertion>& assertions,
                 const json& matrices = json());

void write_text_file(const std::string& path, const std::string& text);

/// CSV summary: one row per assertion.
std::string to_csv(const std::vector<Assertion>& assertions);

}  // namespace fentropy::report
