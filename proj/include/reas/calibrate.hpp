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

#ifndef REAS_CALIBRATE_HPP
#define REAS_CALIBRATE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "reas/dress.hpp"
#include "reas/noise.hpp"

namespace reas {

struct PhaseEstimate {
  double angle_hat = 0;  // in (-pi, pi]
  double std_dev = 0;
  std::vector<int> k_schedule;
  int shots_per_k = 0;
  bool consistent = true;  // false when a stage had no candidate in window
};

// k -> (p0, p_plus) with p0 = (1 + cos kA)/2, p_plus = (1 + sin kA)/2 up to
// bounded perturbations.
using ProbabilityOracle = std::function<std::pair<double, double>(int)>;

// Iterative phase estimation over k = 1, 2, 4, ..., k_max. Each stage
// selects among the candidate angles (raw + 2 pi m)/k the one consistent
// with the previous stage's confidence window, halving the window. With
// shots_per_k > 0 stage probabilities are binomially sampled; otherwise the
// oracle values are used exactly.
PhaseEstimate rpe_estimate(const ProbabilityOracle& oracle, int k_max,
                           int shots_per_k = 0, Philox* rng = nullptr);

// Preparation / measurement pair for one gate type: prepare the +1
// eigenstate of an operator anticommuting with the rotation axis on its
// support, measure it (cosine) and its conjugate partner i P sigma (sine).
struct CalibrationDesign {
  PauliString prep;     // single-qubit P, system width
  PauliString obs_cos;  // P
  PauliString obs_sin;  // i P sigma, Hermitian with a +-1 sign
};
CalibrationDesign calibration_design(const RotationGate& g);

// The layer repeated K times with fresh correlated Pauli strings between
// repetitions (same nested structure as dress()).
DressedCircuit build_calibration_circuit(const Layer& layer, int n, int K,
                                         Philox& rng);

struct ShiftEstimate {
  double delta_theta = 0;  // estimated angle - nominal angle
  PhaseEstimate phase;
};

enum class CalibrationMode { kTwirled, kNaive };

// Calibrates every gate type of the layer in isolation on its support under
// the given per-type interaction noise. The twirled mode inserts correlated
// random Paulis between repetitions (stage probabilities are exact draw
// averages); the naive mode repeats the bare noisy gate. Phase wraps
// trigger a retry with a halved k_max.
std::map<std::string, ShiftEstimate> estimate_shift(
    const Layer& layer, int n_sys, const InteractionNoiseModel& noise,
    int k_max, int shots_per_k, CalibrationMode mode, uint64_t seed);

// Calibration table row emitted by the CLI.
struct CalibrationRow {
  std::string pauli_text;
  double theta_nominal = 0;
  double delta_theta_hat = 0;
  double std_dev = 0;
  int k_max = 0;
  int shots = 0;
};

}  // namespace reas

#endif  // REAS_CALIBRATE_HPP
