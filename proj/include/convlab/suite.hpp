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

#ifndef CONVLAB_SUITE_HPP
#define CONVLAB_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "convlab/scenarios.hpp"

namespace convlab {

struct RunConfig {
  std::vector<std::pair<std::string, nlohmann::json>> scenarios;
  bool seed_set = false;  // no wall-clock fallback: a seed must be given
  std::uint64_t seed = 0;
  McConfig mc;
  std::string out_dir;  // empty: no report files
  std::vector<std::string> formats{"json"};
};

// Every catalog scenario with default parameters; seed left unset.
RunConfig default_suite_config();

// Merges a JSON config document ({"scenarios": [...], "mc": {...},
// "output": {...}, "workers": N}) into cfg.  Throws ParameterError on
// malformed content.
void apply_config_json(RunConfig& cfg, const nlohmann::json& doc);

// Runs every configured scenario, writes report files, prints a summary
// table.  Returns 0 when all verdicts pass, 1 otherwise.  Throws
// ParameterError (config/parameter problems, exit code 2 at the CLI).
int run_suite(const RunConfig& cfg, std::ostream& out);

}  // namespace convlab

#endif  // CONVLAB_SUITE_HPP
