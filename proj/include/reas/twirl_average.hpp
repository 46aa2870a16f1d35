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

#ifndef REAS_TWIRL_AVERAGE_HPP
#define REAS_TWIRL_AVERAGE_HPP

#include <map>
#include <string>
#include <vector>

#include "reas/noise.hpp"
#include "reas/sim.hpp"

namespace reas {

// Exact average over the correlated random Pauli draws of a dressed circuit,
// computed without sampling. The draw sequence v_1..v_B is a Markov chain:
// within a block everything depends only on the current v, and the physical
// insertion between blocks b and b+1 depends on (v_b, v_{b+1}). Propagating
// one conditional density matrix per Pauli value therefore yields the exact
// draw-averaged state. Per-instance gate noise stays fixed at its sample
// realization; insertion noise enters through its exact second-order mean
// channel (the draws are independent per insertion).
class ConditionalTwirlPropagator {
public:
  // `noise` may be null for a noiseless average.
  ConditionalTwirlPropagator(const StateVector& init,
                             const InteractionNoiseModel* noise);

  // sigma_{v_1} plus its insertion noise: splits the state over draw values.
  void leading_insertion();

  // All gates of one block, conditioned on the block's draw value.
  void block_step(const std::vector<PhysicalOp>& gates, uint64_t sample_id,
                  const std::map<std::string, double>& corrections);

  // Correlated difference insertion between consecutive blocks.
  void boundary_step();

  // Trailing sigma_{v_B} insertion and noise; returns the averaged density
  // on the full register. Does not modify the propagator state.
  Matrix finalize() const;

  int n_sys() const { return n_sys_; }

private:
  PauliString pauli_of(int value) const;
  void insertion_mean(Matrix& rho) const;

  int n_sys_, n_env_;
  int num_values_;
  const InteractionNoiseModel* noise_;
  std::vector<Matrix> cond_;  // conditional densities, mass included
  bool split_ = false;
};

// Draw-averaged output density of the dressed, corrected circuit under one
// interaction-noise realization (identified by sample_id).
Matrix twirl_averaged_state(const LayeredCircuit& base,
                            const InteractionNoiseModel& noise,
                            const std::map<std::string, double>& corrections,
                            const StateVector& init, uint64_t sample_id);

// Groups the rotations of an op sequence by block index.
std::vector<std::vector<PhysicalOp>> rotations_by_block(const DressedCircuit& d);

// Helpers shared with the averaged paths.
Matrix partial_trace_env(const Matrix& rho_total, int n_sys, int n_env);
double expectation_density(const Matrix& rho_total, const PauliString& obs_sys,
                           int n_sys, int n_env);

}  // namespace reas

#endif  // REAS_TWIRL_AVERAGE_HPP
