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

#ifndef REAS_SCENARIOS_HPP
#define REAS_SCENARIOS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "reas/circuit.hpp"
#include "reas/config.hpp"
#include "reas/rng.hpp"

namespace reas {

inline constexpr const char* kVersion = "0.1.0";

struct ScenarioResult {
  std::string csv;
  nlohmann::ordered_json summary;
  bool checks_passed = true;
  std::vector<std::string> check_messages;
};

ScenarioResult run_scenario(const ExperimentConfig& cfg);

// Individual scenarios (exposed for the acceptance suite).
ScenarioResult run_fig2(const ExperimentConfig& cfg);
ScenarioResult run_gamma_scaling(const ExperimentConfig& cfg);  // fig3 + fig4
ScenarioResult run_appendix_d(const ExperimentConfig& cfg);
ScenarioResult run_trotter(const ExperimentConfig& cfg);

// Shared pieces.
nlohmann::ordered_json summary_header(const ExperimentConfig& cfg);

// Random layered circuits of the gamma-scaling studies: two-qubit axes on
// (S0, S1), optionally mixed with single-qubit axes, angles from
// {pi/2, pi/4, pi/8} and their negatives (canonicalized). One gate per block.
LayeredCircuit random_scaling_circuit(int n_sys, int depth, bool include_singles,
                                      Philox& rng);

struct MeanStats {
  double mean = 0;
  double std_error = 0;
};
MeanStats mean_and_se(const std::vector<double>& values);

}  // namespace reas

#endif  // REAS_SCENARIOS_HPP
