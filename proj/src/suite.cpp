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

#include "convlab/suite.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "convlab/law.hpp"

namespace convlab {

RunConfig default_suite_config() {
  RunConfig cfg;
  for (const auto& info : list_scenarios()) {
    cfg.scenarios.emplace_back(info.id, nlohmann::json::object());
  }
  return cfg;
}

void apply_config_json(RunConfig& cfg, const nlohmann::json& doc) {
  try {
    if (doc.contains("scenarios")) {
      cfg.scenarios.clear();
      for (const auto& s : doc.at("scenarios")) {
        nlohmann::json params = nlohmann::json::object();
        if (s.contains("params")) params = s.at("params");
        cfg.scenarios.emplace_back(s.at("id").get<std::string>(), params);
      }
    }
    if (doc.contains("mc")) {
      const auto& mc = doc.at("mc");
      if (mc.contains("seed")) {
        cfg.seed = mc.at("seed").get<std::uint64_t>();
        cfg.seed_set = true;
      }
      if (mc.contains("replicates")) {
        cfg.mc.replicates = mc.at("replicates").get<std::size_t>();
      }
      if (mc.contains("sample_sizes")) {
        cfg.mc.index_ladder =
            mc.at("sample_sizes").get<std::vector<double>>();
      }
    }
    if (doc.contains("output")) {
      const auto& out = doc.at("output");
      if (out.contains("directory")) {
        cfg.out_dir = out.at("directory").get<std::string>();
      }
      if (out.contains("formats")) {
        cfg.formats = out.at("formats").get<std::vector<std::string>>();
      }
    }
    if (doc.contains("workers")) {
      cfg.mc.workers = doc.at("workers").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  for (const auto& f : cfg.formats) {
    if (f != "json" && f != "csv") {
      throw ParameterError("config: unknown output format '" + f + "'");
    }
  }
}

namespace {

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw ParameterError("cannot write to '" + path.string() + "'");
  }
  os << content;
}

void write_overlay_csv(const std::filesystem::path& path,
                       const std::vector<std::array<double, 3>>& rows) {
  std::string body = "x,F_n,F\n";
  char buf[128];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", row[0], row[1],
                  row[2]);
    body += buf;
  }
  write_text_file(path, body);
}

}  // namespace

int run_suite(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed_set) {
    throw ParameterError("a seed is required (config mc.seed or --seed)");
  }
  const bool want_json =
      std::find(cfg.formats.begin(), cfg.formats.end(), "json") !=
      cfg.formats.end();
  const bool want_csv =
      std::find(cfg.formats.begin(), cfg.formats.end(), "csv") !=
      cfg.formats.end();
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
  }

  char line[256];
  std::snprintf(line, sizeof(line), "%-14s %12s %12s  %s\n", "scenario",
                "final", "tolerance", "verdict");
  out << line;
  std::vector<std::string> failed;
  for (const auto& [id, params] : cfg.scenarios) {
    const ScenarioResult res =
        run_scenario_detailed(id, params, cfg.mc, cfg.seed);
    const auto& rep = res.report;
    std::snprintf(line, sizeof(line), "%-14s %12.4e %12.4e  %s\n",
                  rep.scenario.c_str(),
                  rep.values.empty() ? 0.0 : rep.values.back(), rep.tolerance,
                  rep.pass ? "pass" : "FAIL");
    out << line;
    if (!rep.pass) failed.push_back(id);

    if (!cfg.out_dir.empty()) {
      const std::string stem =
          id + "_seed" + std::to_string(cfg.seed);
      const std::filesystem::path dir(cfg.out_dir);
      if (want_json) {
        write_text_file(dir / (stem + ".json"), report_to_json(rep));
      }
      if (want_csv) {
        std::string body = "scenario,index,value\n";
        char buf[128];
        for (std::size_t i = 0; i < rep.index_values.size(); ++i) {
          std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g\n",
                        rep.scenario.c_str(), rep.index_values[i],
                        rep.values[i]);
          body += buf;
        }
        write_text_file(dir / (stem + ".csv"), body);
        if (!res.cdf_overlay.empty()) {
          write_overlay_csv(dir / (stem + "_cdf.csv"), res.cdf_overlay);
        }
      }
    }
  }
  if (!failed.empty()) {
    out << "failed:";
    for (const auto& id : failed) out << ' ' << id;
    out << '\n';
    return 1;
  }
  return 0;
}

}  // namespace convlab
