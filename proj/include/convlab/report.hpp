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

#ifndef CONVLAB_REPORT_HPP
#define CONVLAB_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace convlab {

struct McRecord {
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
  std::vector<double> sample_sizes;
};

struct ConvergenceReport {
  std::string scenario;
  std::vector<double> index_values;
  std::string metric;
  std::vector<double> values;  // one per index value
  McRecord mc;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;
};

// Deterministic serializations: reruns with identical inputs are
// byte-identical.
std::string report_to_json(const ConvergenceReport& report);
void report_write_csv(const ConvergenceReport& report, std::ostream& os);

// Exact traces: strictly decreasing, final value <= tol.
bool exact_trace_pass(const std::vector<double>& values, double tol);

// Monte Carlo traces: final value <= tol, at most one inversion, and any
// inversion stays within 3 standard errors of the trace noise.
bool mc_trace_pass(const std::vector<double>& values, double tol,
                   double stderr_band);

}  // namespace convlab

#endif  // CONVLAB_REPORT_HPP
