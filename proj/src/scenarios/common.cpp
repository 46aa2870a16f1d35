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

#include "reas/scenarios.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace reas {

ScenarioResult run_scenario(const ExperimentConfig& cfg) {
  if (cfg.scenario == "fig2-depth-scaling") return run_fig2(cfg);
  if (cfg.scenario == "fig3-gamma-scaling") return run_gamma_scaling(cfg);
  if (cfg.scenario == "fig4-spt") return run_gamma_scaling(cfg);
  if (cfg.scenario == "appendix-d") return run_appendix_d(cfg);
  if (cfg.scenario == "trotter-ising") return run_trotter(cfg);
  throw std::invalid_argument("unknown scenario " + cfg.scenario);
}

nlohmann::ordered_json summary_header(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["scenario"] = cfg.scenario;
  std::ostringstream hash;
  hash << std::hex << config_hash(cfg.raw);
  j["config_hash"] = hash.str();
  j["seed"] = cfg.seed;
  return j;
}

LayeredCircuit random_scaling_circuit(int n_sys, int depth, bool include_singles,
                                      Philox& rng) {
  if (n_sys < 2) throw std::invalid_argument("need two system qubits");
  LayeredCircuit c;
  c.n = n_sys;
  const double magnitudes[3] = {M_PI / 2, M_PI / 4, M_PI / 8};
  for (int d = 0; d < depth; ++d) {
    double theta = magnitudes[rng.uniform_int(3)];
    if (rng.bernoulli(0.5)) theta = -theta;  // canonicalized by the gate ctor
    PauliString axis;
    if (include_singles && rng.bernoulli(0.5)) {
      int q = static_cast<int>(rng.uniform_int(static_cast<uint64_t>(n_sys)));
      axis = PauliString::single(n_sys, q, "XYZ"[rng.uniform_int(3)]);
    } else {
      std::string text(static_cast<size_t>(n_sys), 'I');
      text[0] = "XYZ"[rng.uniform_int(3)];
      text[1] = "XYZ"[rng.uniform_int(3)];
      axis = PauliString::from_text(text);
    }
    c.append_block(Block{{Layer{{RotationGate(axis, theta)}}}});
  }
  return c;
}

MeanStats mean_and_se(const std::vector<double>& values) {
  MeanStats s;
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double var = 0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  var /= static_cast<double>(values.size() - 1);
  s.std_error = std::sqrt(var / static_cast<double>(values.size()));
  return s;
}

}  // namespace reas
