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

#ifndef REAS_STATE_HPP
#define REAS_STATE_HPP

#include <utility>
#include <vector>

#include "reas/dense.hpp"
#include "reas/pauli.hpp"

namespace reas {

// Dense statevector limit; full-unitary construction is capped separately.
constexpr int kStateQubitCap = 12;
constexpr int kNoisyUnitaryQubitCap = 6;

// Pure state on system tensor environment. System qubits come first
// (indices 0 .. n_sys-1) and occupy the most significant index bits.
struct StateVector {
  int n_sys = 0;
  int n_env = 0;
  Vector amps;

  int n_total() const { return n_sys + n_env; }
  int64_t dim() const { return int64_t{1} << n_total(); }

  static StateVector zero_state(int n_sys, int n_env);

  // Product state with the given single-qubit kets on selected qubits,
  // |0> elsewhere.
  static StateVector product_state(
      int n_sys, int n_env,
      const std::vector<std::pair<int, Eigen::Vector2cd>>& kets);

  double norm() const { return amps.norm(); }
};

// <psi| (obs tensor I_env) |psi>, real up to numerical noise. The observable
// must be supported on system qubits and carry a +-1 phase.
double expectation(const StateVector& s, const PauliString& obs);

// Partial trace over the environment.
Matrix reduced_system_density(const StateVector& s);

// 1/2 || tr_env |a><a| - tr_env |b><b| ||_1
double trace_distance_system(const StateVector& a, const StateVector& b);

// sqrt(sum_k p_k (ideal - value_k)^2); weights must sum to 1 (1e-9).
double rms_error(double ideal,
                 const std::vector<std::pair<double, double>>& weighted_samples);

}  // namespace reas

#endif  // REAS_STATE_HPP
