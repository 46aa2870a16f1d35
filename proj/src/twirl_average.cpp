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

#include "reas/twirl_average.hpp"

#include <stdexcept>

#include "reas/kernels.hpp"

namespace reas {

namespace {

std::vector<int> iota_qubits(int n) {
  std::vector<int> qs(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) qs[static_cast<size_t>(q)] = q;
  return qs;
}

void conjugate_rotation(Matrix& rho, int n_total, const std::vector<int>& qubits,
                        const PauliString& local_axis, double angle) {
  // rho -> G rho G^dag without forming the full-width gate.
  apply_local_rotation(rho, n_total, qubits, local_axis, angle);
  rho.adjointInPlace();
  apply_local_rotation(rho, n_total, qubits, local_axis, angle);
  rho.adjointInPlace();
}

}  // namespace

ConditionalTwirlPropagator::ConditionalTwirlPropagator(
    const StateVector& init, const InteractionNoiseModel* noise)
    : n_sys_(init.n_sys), n_env_(init.n_env), noise_(noise) {
  if (n_sys_ > 3)
    throw std::invalid_argument(
        "conditional twirl average is exponential in system qubits; cap is 3");
  num_values_ = 1 << (2 * n_sys_);
  cond_.assign(static_cast<size_t>(num_values_),
               init.amps * init.amps.adjoint());
}

PauliString ConditionalTwirlPropagator::pauli_of(int value) const {
  uint64_t mask = (uint64_t{1} << n_sys_) - 1;
  return PauliString(n_sys_, static_cast<uint64_t>(value) & mask,
                     static_cast<uint64_t>(value) >> n_sys_, 0);
}

void ConditionalTwirlPropagator::insertion_mean(Matrix& rho) const {
  if (noise_) noise_->apply_insertion_mean(rho);
}

void ConditionalTwirlPropagator::leading_insertion() {
  if (split_) throw std::logic_error("leading insertion applied twice");
  std::vector<int> sys = iota_qubits(n_sys_);
  double w = 1.0 / num_values_;
  for (int v = 0; v < num_values_; ++v) {
    PauliString wide = PauliString::embed(n_sys_ + n_env_, sys, pauli_of(v));
    conjugate_pauli(cond_[static_cast<size_t>(v)], wide);
    insertion_mean(cond_[static_cast<size_t>(v)]);
    cond_[static_cast<size_t>(v)] *= w;
  }
  split_ = true;
}

void ConditionalTwirlPropagator::block_step(
    const std::vector<PhysicalOp>& gates, uint64_t sample_id,
    const std::map<std::string, double>& corrections) {
  if (!split_) throw std::logic_error("leading insertion missing");
  int n_total = n_sys_ + n_env_;
  for (const auto& op : gates) {
    if (op.kind != PhysicalOp::Kind::kRotation)
      throw std::invalid_argument("block_step expects rotations");
    double theta = op.theta_nominal;
    auto it = corrections.find(op.type_key);
    if (it != corrections.end()) theta -= it->second;

    std::pair<Matrix, Matrix> noise_pair;
    if (noise_) noise_pair = noise_->op_unitaries(op, sample_id);

    for (int v = 0; v < num_values_; ++v) {
      // The executed rotation always follows the draw's sign factor; drive
      // coupling only decides which noise exponent applies.
      int s = commutation_sign(op.axis, pauli_of(v)).value();
      Matrix& rho = cond_[static_cast<size_t>(v)];
      conjugate_rotation(rho, n_total, op.axis.support(),
                         op.axis.restrict_to(op.axis.support()), s * theta);
      if (noise_) {
        int s_eff = op.drive_coupled ? s : 1;
        const Matrix& u = (s_eff > 0) ? noise_pair.first : noise_pair.second;
        rho = u * rho * u.adjoint();
      }
    }
  }
}

void ConditionalTwirlPropagator::boundary_step() {
  if (!split_) throw std::logic_error("leading insertion missing");
  std::vector<int> sys = iota_qubits(n_sys_);
  int n_total = n_sys_ + n_env_;
  std::vector<Matrix> next(static_cast<size_t>(num_values_));
  for (int vp = 0; vp < num_values_; ++vp) {
    Matrix acc = Matrix::Zero(cond_[0].rows(), cond_[0].cols());
    for (int v = 0; v < num_values_; ++v) {
      PauliString ins = correlated_difference(pauli_of(vp), pauli_of(v));
      PauliString wide = PauliString::embed(n_total, sys, ins);
      Matrix term = cond_[static_cast<size_t>(v)];
      conjugate_pauli(term, wide);
      acc += term;
    }
    insertion_mean(acc);
    next[static_cast<size_t>(vp)] = acc / num_values_;
  }
  cond_ = std::move(next);
}

Matrix ConditionalTwirlPropagator::finalize() const {
  if (!split_) throw std::logic_error("leading insertion missing");
  std::vector<int> sys = iota_qubits(n_sys_);
  int n_total = n_sys_ + n_env_;
  Matrix out = Matrix::Zero(cond_[0].rows(), cond_[0].cols());
  for (int v = 0; v < num_values_; ++v) {
    PauliString wide = PauliString::embed(n_total, sys, pauli_of(v));
    Matrix term = cond_[static_cast<size_t>(v)];
    conjugate_pauli(term, wide);
    insertion_mean(term);
    out += term;
  }
  return out;
}

std::vector<std::vector<PhysicalOp>> rotations_by_block(const DressedCircuit& d) {
  int num_blocks = static_cast<int>(d.base.blocks.size());
  std::vector<std::vector<PhysicalOp>> out(static_cast<size_t>(num_blocks));
  for (const auto& op : d.ops)
    if (op.kind == PhysicalOp::Kind::kRotation)
      out[static_cast<size_t>(op.block)].push_back(op);
  return out;
}

Matrix twirl_averaged_state(const LayeredCircuit& base,
                            const InteractionNoiseModel& noise,
                            const std::map<std::string, double>& corrections,
                            const StateVector& init, uint64_t sample_id) {
  DressedCircuit plan = undressed(base);
  auto blocks = rotations_by_block(plan);
  ConditionalTwirlPropagator prop(init, &noise);
  prop.leading_insertion();
  for (size_t b = 0; b < blocks.size(); ++b) {
    prop.block_step(blocks[b], sample_id, corrections);
    if (b + 1 < blocks.size()) prop.boundary_step();
  }
  return prop.finalize();
}

Matrix partial_trace_env(const Matrix& rho_total, int n_sys, int n_env) {
  int64_t sys_dim = int64_t{1} << n_sys;
  int64_t env_dim = int64_t{1} << n_env;
  Matrix out = Matrix::Zero(sys_dim, sys_dim);
  for (int64_t i = 0; i < sys_dim; ++i)
    for (int64_t j = 0; j < sys_dim; ++j) {
      Complex acc = 0;
      for (int64_t e = 0; e < env_dim; ++e)
        acc += rho_total(i * env_dim + e, j * env_dim + e);
      out(i, j) = acc;
    }
  return out;
}

double expectation_density(const Matrix& rho_total, const PauliString& obs_sys,
                           int n_sys, int n_env) {
  std::vector<int> sys = iota_qubits(n_sys);
  PauliString wide = PauliString::embed(n_sys + n_env, sys, obs_sys);
  Matrix tmp = rho_total;
  apply_pauli(tmp, wide);  // O * rho
  return tmp.trace().real();
}

}  // namespace reas
