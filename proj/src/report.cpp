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

#include "fentropy/report.hpp"

#include <fstream>
#include <sstream>

namespace fentropy::report {

json assertion_to_json(const Assertion& a) {
  json j;
  j["name"] = a.name;
  j["value"] = a.value;
  j["threshold"] = a.threshold;
  j["pass"] = a.pass;
  return j;
}

json matrix_to_json(const linalg::Matrix& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

linalg::Matrix matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& data = j.at("data");
  if (static_cast<int>(data.size()) != rows * cols) {
    throw Error("matrix payload size does not match declared shape");
  }
  linalg::Matrix m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i) {
    for (int c = 0; c < cols; ++c, ++k) {
      m(i, c) = {data[k][0].get<double>(), data[k][1].get<double>()};
    }
  }
  return m;
}

json make_report(const std::string& scenario, const json& config,
                 const std::vector<Assertion>& assertions, const json& matrices) {
  json j;
  j["scenario"] = scenario;
  j["config"] = config;
  j["version"] = kVersion;
  json arr = json::array();
  for (const auto& a : assertions) arr.push_back(assertion_to_json(a));
  j["assertions"] = std::move(arr);
  if (!matrices.is_null() && !matrices.empty()) j["matrices"] = matrices;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
  if (!out) throw Error("failed writing output file: " + path);
}

std::string to_csv(const std::vector<Assertion>& assertions) {
  std::ostringstream os;
  os << "name,value,threshold,pass\n";
  for (const auto& a : assertions) {
    os << a.name << ',' << json(a.value).dump() << ',' << json(a.threshold).dump() << ','
       << (a.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace fentropy::report
