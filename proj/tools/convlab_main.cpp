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

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "convlab/law.hpp"
#include "convlab/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "convlab: distributional-limit scenarios with exact oracles and "
      "seeded Monte Carlo"};

  std::string config_path;
  std::vector<std::string> scenario_ids;
  std::int64_t seed = 0;
  std::size_t replicates = 0;
  std::string out_dir;
  std::vector<std::string> formats;
  std::size_t workers = 0;
  bool list_only = false;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--scenario", scenario_ids,
                 "scenario id (repeatable; default: the full catalog)");
  auto* seed_opt = app.add_option("--seed", seed, "64-bit Monte Carlo seed");
  app.add_option("--replicates", replicates, "Monte Carlo replicates per run");
  app.add_option("--out", out_dir, "report output directory");
  app.add_option("--format", formats, "report format: json or csv (repeatable)");
  app.add_option("--workers", workers, "worker threads for replicate loops");
  app.add_flag("--list", list_only, "list the scenario catalog and exit");

  CLI11_PARSE(app, argc, argv);

  if (list_only) {
    for (const auto& info : convlab::list_scenarios()) {
      std::printf("%-14s %s (%s)\n", info.id.c_str(), info.summary.c_str(),
                  info.reference.c_str());
    }
    return 0;
  }

  try {
    convlab::RunConfig cfg = convlab::default_suite_config();
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "error: cannot open config '" << config_path << "'\n";
        return 2;
      }
      nlohmann::json doc;
      try {
        is >> doc;
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: config parse failure: " << e.what() << '\n';
        return 2;
      }
      convlab::apply_config_json(cfg, doc);
    }
    // Flags override config fields.
    if (!scenario_ids.empty()) {
      cfg.scenarios.clear();
      for (const auto& id : scenario_ids) {
        cfg.scenarios.emplace_back(id, nlohmann::json::object());
      }
    }
    if (seed_opt->count() > 0) {
      cfg.seed = static_cast<std::uint64_t>(seed);
      cfg.seed_set = true;
    }
    if (replicates > 0) cfg.mc.replicates = replicates;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!formats.empty()) {
      cfg.formats = formats;
      for (const auto& f : cfg.formats) {
        if (f != "json" && f != "csv") {
          std::cerr << "error: unknown format '" << f << "'\n";
          return 2;
        }
      }
    }
    if (workers > 0) cfg.mc.workers = workers;

    return convlab::run_suite(cfg, std::cout);
  } catch (const convlab::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const convlab::UnknownLawError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
