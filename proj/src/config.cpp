// Copyright 2026 The reas-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reas/config.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace reas {

ConfigMap ConfigMap::parse(std::istream& in) {
  ConfigMap cfg;
  std::string line, section;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.front() == '[') {
      if (first.back() != ']')
        throw std::invalid_argument("malformed section header at line " +
                                    std::to_string(line_no));
      section = first.substr(1, first.size() - 2);
      continue;
    }
    std::string eq;
    if (!(ls >> eq) || eq != "=")
      throw std::invalid_argument("expected 'key = value' at line " +
                                  std::to_string(line_no));
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    std::string key = section.empty() ? first : section + "." + first;
    cfg.entries_[key].push_back(std::move(tokens));
  }
  return cfg;
}

bool ConfigMap::has(const std::string& key) const {
  return entries_.count(key) > 0;
}

std::string ConfigMap::str(const std::string& key,
                           const std::string& fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end() || it->second.empty() || it->second.back().empty())
    return fallback;
  return it->second.back().front();
}

double ConfigMap::num(const std::string& key, double fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return std::stod(it->second.back().front());
}

int ConfigMap::integer(const std::string& key, int fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return std::stoi(it->second.back().front());
}

uint64_t ConfigMap::uint(const std::string& key, uint64_t fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return std::stoull(it->second.back().front());
}

bool ConfigMap::flag(const std::string& key, bool fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second.back().front();
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("boolean expected for " + key);
}

std::vector<double> ConfigMap::list(const std::string& key,
                                    const std::vector<double>& fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<double> out;
  for (const auto& tok : it->second.back()) out.push_back(std::stod(tok));
  return out;
}

std::vector<std::string> ConfigMap::occurrences(const std::string& key) const {
  std::vector<std::string> out;
  auto it = entries_.find(key);
  if (it == entries_.end()) return out;
  for (const auto& tokens : it->second) {
    std::string joined;
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (i) joined += " ";
      joined += tokens[i];
    }
    out.push_back(joined);
  }
  return out;
}

std::string ConfigMap::canonical() const {
  std::string out;
  for (const auto& [key, occurrences] : entries_) {
    for (const auto& tokens : occurrences) {
      out += key;
      out += " =";
      for (const auto& t : tokens) {
        out += " ";
        out += t;
      }
      out += "\n";
    }
  }
  return out;
}

uint64_t config_hash(const ConfigMap& cfg) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : cfg.canonical()) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

const std::vector<std::string>& known_scenarios() {
  static const std::vector<std::string> ids = {
      "fig2-depth-scaling", "fig3-gamma-scaling", "fig4-spt", "appendix-d",
      "trotter-ising"};
  return ids;
}

namespace {

std::vector<int> to_int_list(const std::vector<double>& v) {
  std::vector<int> out;
  for (double x : v) out.push_back(static_cast<int>(std::llround(x)));
  return out;
}

}  // namespace

ExperimentConfig load_experiment_config(std::istream& in) {
  ConfigMap raw = ConfigMap::parse(in);
  ExperimentConfig cfg;
  cfg.raw = raw;
  cfg.scenario = raw.str("scenario", "");
  const auto& ids = known_scenarios();
  if (std::find(ids.begin(), ids.end(), cfg.scenario) == ids.end())
    throw std::invalid_argument("unknown scenario \"" + cfg.scenario + "\"");

  cfg.seed = raw.uint("seed", 1);
  cfg.out_dir = raw.str("out", ".");
  cfg.workers = raw.integer("workers", 0);

  cfg.n_sys = raw.integer("system.n_sys", 2);
  cfg.n_env = raw.integer("system.n_env", 2);

  cfg.gamma = raw.num("noise.gamma", 0.01);
  cfg.bias_factor = raw.num("noise.bias_factor", 10.0);
  cfg.epsilon = raw.num("noise.epsilon", 1e-3);
  cfg.overrotation = raw.num("noise.overrotation", 0.05);

  if (cfg.scenario == "fig2-depth-scaling") {
    cfg.b_values =
        raw.list("sweep.b_values", {1, 2, 5, 10, 20, 50, 100, 200, 500});
    cfg.samples = raw.integer("run.samples", 50);
    cfg.observable = raw.str("run.observable", "IZII");
    cfg.calibration_trials = raw.integer("run.calibration_trials", 1);
    cfg.k_max = raw.integer("run.k_max", 64);
    cfg.shots_per_k = raw.integer("run.shots_per_k", 65536);
    if (cfg.b_values.empty()) throw std::invalid_argument("empty B sweep");
  } else if (cfg.scenario == "fig3-gamma-scaling") {
    cfg.gamma_values = raw.list("sweep.gamma_values", {1e-4, 3e-4, 1e-3, 3e-3});
    cfg.depth = raw.integer("run.depth", 200);
    cfg.samples = raw.integer("run.samples", 200);
  } else if (cfg.scenario == "fig4-spt") {
    cfg.gamma_values = raw.list("sweep.gamma_values", {2e-4, 5e-4, 1e-3, 5e-3});
    cfg.depth = raw.integer("run.depth", 200);
    cfg.samples = raw.integer("run.samples", 200);
  } else if (cfg.scenario == "appendix-d") {
    cfg.rc_depths = to_int_list(raw.list("sweep.rc_depths", {1, 2, 3, 4, 8, 16}));
    cfg.fig8_depths =
        to_int_list(raw.list("sweep.fig8_depths", {2, 4, 8, 16, 32, 64, 128}));
    cfg.samples = raw.integer("run.samples", 4096);
  } else if (cfg.scenario == "trotter-ising") {
    cfg.trotter_steps =
        to_int_list(raw.list("sweep.steps", {1, 2, 3, 4, 5, 6, 8, 10, 13, 16}));
    cfg.trotter_sites = raw.integer("system.sites", 8);
    cfg.trotter_draws = raw.integer("run.draws", 25);
    cfg.x_angle = raw.num("run.x_angle", 0.1 * M_PI);
    cfg.n_env = 0;
    if (cfg.trotter_steps.empty()) throw std::invalid_argument("empty step sweep");
  }

  if (raw.has("run.full")) cfg.full = raw.flag("run.full", false);
  if (cfg.full && cfg.scenario == "fig3-gamma-scaling") {
    cfg.depth = raw.integer("run.full_depth", 1000);
    cfg.samples = raw.integer("run.full_samples", 4000);
  }
  if (cfg.full && cfg.scenario == "fig4-spt") {
    cfg.depth = raw.integer("run.full_depth", 1000);
    cfg.samples = raw.integer("run.full_samples", 4000);
  }

  if (cfg.samples < 2) throw std::invalid_argument("sample counts must be >= 2");
  if ((cfg.scenario == "fig3-gamma-scaling" || cfg.scenario == "fig4-spt") &&
      cfg.gamma_values.empty())
    throw std::invalid_argument("empty gamma sweep");
  return cfg;
}

}  // namespace reas
