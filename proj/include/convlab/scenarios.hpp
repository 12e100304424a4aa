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

#ifndef CONVLAB_SCENARIOS_HPP
#define CONVLAB_SCENARIOS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "convlab/report.hpp"
#include "json.hpp"

namespace convlab {

struct McConfig {
  std::size_t replicates = 2000;
  std::vector<double> index_ladder;  // empty: scenario default
  std::size_t workers = 1;
};

struct ScenarioResult {
  ConvergenceReport report;
  // Side artifacts for acceptance checks and plots.
  std::map<std::string, double> stats;
  Eigen::MatrixXd emp_cov;     // empirical covariance at the final index
  Eigen::MatrixXd target_cov;  // its formula target
  std::vector<std::array<double, 3>> cdf_overlay;  // (x, F_n(x), F(x))
};

// Scenario catalog: BIN2POIS, BIN_CLT, CLT_RK, CORR_COEF, EP_FINDIM,
// EVT_FRECHET, EVT_GUMBEL, EVT_WEIBULL, HYP2BIN, INVAR_PRINC,
// MULTINOM_CLT, NEGBIN_CLT, POIS2GAUSS.
ScenarioResult run_scenario_detailed(const std::string& id,
                                     const nlohmann::json& params,
                                     const McConfig& mc, std::uint64_t seed);

ConvergenceReport run_scenario(const std::string& id,
                               const nlohmann::json& params,
                               const McConfig& mc, std::uint64_t seed);

struct ScenarioInfo {
  std::string id;
  std::string summary;    // what is driven to its limit
  std::string reference;  // classical name of the limit theorem
};

// Alphabetized, stable across runs.
std::vector<ScenarioInfo> list_scenarios();

}  // namespace convlab

#endif  // CONVLAB_SCENARIOS_HPP
