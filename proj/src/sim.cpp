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

#include "reas/sim.hpp"

#include <stdexcept>

#include "reas/kernels.hpp"

namespace reas {

namespace {

std::vector<int> iota_qubits(int n) {
  std::vector<int> qs(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) qs[static_cast<size_t>(q)] = q;
  return qs;
}

}  // namespace

StateVector run_shot(const DressedCircuit& d, const NoiseBinding& noise,
                     StateVector init, uint64_t sample_id) {
  if (init.n_sys != d.n() || init.n_total() != noise.n_total())
    throw std::invalid_argument("state, circuit and noise dimensions differ");
  int n_total = init.n_total();
  std::vector<int> sys_qubits = iota_qubits(d.n());

  for (const auto& op : d.ops) {
    GateRealization r = noise.realize(op, sample_id);
    if (r.pre_full) init.amps = (*r.pre_full) * init.amps;
    if (op.kind == PhysicalOp::Kind::kInsertion) {
      PauliString wide = PauliString::embed(n_total, sys_qubits, op.axis);
      apply_pauli(init.amps, wide);
    } else {
      double angle = op.sign * op.theta + r.extra_angle;
      apply_local_rotation(init.amps, n_total, op.axis.support(),
                           op.axis.restrict_to(op.axis.support()), angle);
    }
    if (r.post_full) init.amps = (*r.post_full) * init.amps;
    if (std::abs(init.amps.squaredNorm() - 1.0) > 2e-8)
      throw std::runtime_error("statevector norm drifted beyond tolerance");
  }
  return init;
}

Matrix run_unitary(const DressedCircuit& d, const NoiseBinding& noise,
                   int n_env, uint64_t sample_id) {
  int n_total = d.n() + n_env;
  if (n_total > kNoisyUnitaryQubitCap)
    throw std::invalid_argument("register exceeds the dense unitary cap");
  if (n_total != noise.n_total())
    throw std::invalid_argument("circuit and noise dimensions differ");
  std::vector<int> sys_qubits = iota_qubits(d.n());
  int64_t dim = int64_t{1} << n_total;
  Matrix u = Matrix::Identity(dim, dim);

  for (const auto& op : d.ops) {
    GateRealization r = noise.realize(op, sample_id);
    if (r.pre_full) u = (*r.pre_full) * u;
    if (op.kind == PhysicalOp::Kind::kInsertion) {
      PauliString wide = PauliString::embed(n_total, sys_qubits, op.axis);
      apply_pauli(u, wide);
    } else {
      double angle = op.sign * op.theta + r.extra_angle;
      apply_local_rotation(u, n_total, op.axis.support(),
                           op.axis.restrict_to(op.axis.support()), angle);
    }
    if (r.post_full) u = (*r.post_full) * u;
  }
  return u;
}

StateVector run_ideal(const LayeredCircuit& c, StateVector init) {
  NoNoise none(init.n_sys, init.n_env);
  return run_shot(undressed(c), none, std::move(init), 0);
}

}  // namespace reas
