// Copyright 2026 The convlab authors.
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

#include "convlab/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace convlab {

std::string report_to_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["scenario"] = report.scenario;
  j["index_values"] = report.index_values;
  j["metric"] = report.metric;
  j["values"] = report.values;
  j["mc"] = {{"seed", report.mc.seed},
             {"replicates", report.mc.replicates},
             {"sample_sizes", report.mc.sample_sizes}};
  j["tolerance"] = report.tolerance;
  j["verdict"] = report.pass ? "pass" : "fail";
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

void report_write_csv(const ConvergenceReport& report, std::ostream& os) {
  os << "scenario,index,value\n";
  char buf[40];
  for (std::size_t i = 0; i < report.index_values.size(); ++i) {
    os << report.scenario << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", report.index_values[i]);
    os << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", report.values[i]);
    os << buf << '\n';
  }
}

bool exact_trace_pass(const std::vector<double>& values, double tol) {
  if (values.empty()) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) return false;
  }
  return values.back() <= tol;
}

bool mc_trace_pass(const std::vector<double>& values, double tol,
                   double stderr_band) {
  if (values.empty()) return false;
  int inversions = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) {
      if (values[i] - values[i - 1] >= 3.0 * stderr_band) return false;
      if (++inversions > 1) return false;
    }
  }
  return values.back() <= tol;
}

}  // namespace convlab
