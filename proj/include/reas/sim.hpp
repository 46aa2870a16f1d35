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

#ifndef REAS_SIM_HPP
#define REAS_SIM_HPP

#include "reas/dress.hpp"
#include "reas/noise.hpp"
#include "reas/state.hpp"

namespace reas {

// Runs the op sequence on `init`, applying each op's noise realization.
// Aborts when the norm drifts by more than 1e-8 (realizations are exact
// unitaries, so drift indicates a bug upstream).
StateVector run_shot(const DressedCircuit& d, const NoiseBinding& noise,
                     StateVector init, uint64_t sample_id);

// Full unitary of the noisy op sequence on system + environment. Capped at
// kNoisyUnitaryQubitCap total qubits.
Matrix run_unitary(const DressedCircuit& d, const NoiseBinding& noise,
                   int n_env, uint64_t sample_id);

// Noiseless convenience wrappers.
StateVector run_ideal(const LayeredCircuit& c, StateVector init);

}  // namespace reas

#endif  // REAS_SIM_HPP
