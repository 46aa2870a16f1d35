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

#ifndef REAS_CONFIG_HPP
#define REAS_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace reas {

// Key-value config with [section] headers; keys become "section.key".
// Repeated keys keep every occurrence in order ("[circuit] op = ..." lines
// embed a circuit).
class ConfigMap {
public:
  static ConfigMap parse(std::istream& in);

  bool has(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback) const;
  double num(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  uint64_t uint(const std::string& key, uint64_t fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::vector<double> list(const std::string& key,
                           const std::vector<double>& fallback) const;
  std::vector<std::string> occurrences(const std::string& key) const;

  // Canonical text: sorted keys, single spaces; used for the config hash.
  std::string canonical() const;

private:
  std::map<std::string, std::vector<std::vector<std::string>>> entries_;
};

struct ExperimentConfig {
  std::string scenario;
  uint64_t seed = 1;
  std::string out_dir = ".";
  bool full = false;
  bool merge_inserted = false;
  bool check = false;
  int workers = 0;  // 0 = hardware concurrency

  int n_sys = 2;
  int n_env = 2;

  // Noise parameters.
  double gamma = 0.01;
  double bias_factor = 10.0;
  double epsilon = 1e-3;
  double overrotation = 0.05;

  // Sweeps.
  std::vector<double> b_values;
  std::vector<double> gamma_values;
  std::vector<int> trotter_steps;
  std::vector<int> rc_depths;
  std::vector<int> fig8_depths;

  // Run sizes.
  int samples = 200;
  int depth = 200;
  int calibration_trials = 1;
  int k_max = 64;
  int shots_per_k = 65536;
  std::string observable = "IZII";

  // Trotter scenario.
  int trotter_sites = 8;
  int trotter_draws = 25;
  double x_angle = 0;  // 0 means default 0.1*pi

  ConfigMap raw;
};

// Parses a config stream and applies per-scenario defaults; throws
// std::invalid_argument on unknown scenarios or invalid values.
ExperimentConfig load_experiment_config(std::istream& in);

// FNV-1a hash of the canonical config text.
uint64_t config_hash(const ConfigMap& cfg);

const std::vector<std::string>& known_scenarios();

}  // namespace reas

#endif  // REAS_CONFIG_HPP
