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

#include "reas/state.hpp"

#include <stdexcept>

#include "reas/kernels.hpp"

namespace reas {

StateVector StateVector::zero_state(int n_sys, int n_env) {
  if (n_sys + n_env > kStateQubitCap)
    throw std::invalid_argument("register exceeds the dense statevector cap");
  if (n_sys < 1) throw std::invalid_argument("need at least one system qubit");
  StateVector s;
  s.n_sys = n_sys;
  s.n_env = n_env;
  s.amps = Vector::Zero(int64_t{1} << (n_sys + n_env));
  s.amps(0) = 1.0;
  return s;
}

StateVector StateVector::product_state(
    int n_sys, int n_env,
    const std::vector<std::pair<int, Eigen::Vector2cd>>& kets) {
  StateVector s = zero_state(n_sys, n_env);
  for (const auto& [qubit, ket] : kets) {
    Matrix local(2, 2);
    // Unitary taking |0> to the requested ket.
    Eigen::Vector2cd k = ket.normalized();
    local << k(0), -std::conj(k(1)), k(1), std::conj(k(0));
    apply_local_matrix(s.amps, s.n_total(), {qubit}, local);
  }
  return s;
}

double expectation(const StateVector& s, const PauliString& obs) {
  if (obs.n() != s.n_sys)
    throw std::invalid_argument("observable width must match the system register");
  if (obs.phase_exp() == 1 || obs.phase_exp() == 3)
    throw std::invalid_argument("observable must be Hermitian");
  std::vector<int> sys_qubits(static_cast<size_t>(s.n_sys));
  for (int q = 0; q < s.n_sys; ++q) sys_qubits[static_cast<size_t>(q)] = q;
  PauliString wide = PauliString::embed(s.n_total(), sys_qubits, obs);
  Vector tmp = s.amps;
  apply_pauli(tmp, wide);
  Complex val = s.amps.dot(tmp);
  return val.real();
}

Matrix reduced_system_density(const StateVector& s) {
  int64_t sys_dim = int64_t{1} << s.n_sys;
  int64_t env_dim = int64_t{1} << s.n_env;
  // Environment qubits are the trailing (least significant) index bits.
  Matrix rho = Matrix::Zero(sys_dim, sys_dim);
  for (int64_t i = 0; i < sys_dim; ++i)
    for (int64_t j = 0; j < sys_dim; ++j) {
      Complex acc = 0;
      for (int64_t e = 0; e < env_dim; ++e)
        acc += s.amps(i * env_dim + e) * std::conj(s.amps(j * env_dim + e));
      rho(i, j) = acc;
    }
  return rho;
}

double trace_distance_system(const StateVector& a, const StateVector& b) {
  if (a.n_sys != b.n_sys || a.n_env != b.n_env)
    throw std::invalid_argument("state layouts differ");
  return trace_distance(reduced_system_density(a), reduced_system_density(b));
}

double rms_error(double ideal,
                 const std::vector<std::pair<double, double>>& weighted_samples) {
  if (weighted_samples.empty())
    throw std::invalid_argument("rms_error needs at least one sample");
  double wsum = 0, acc = 0;
  for (const auto& [p, value] : weighted_samples) {
    wsum += p;
    double d = ideal - value;
    acc += p * d * d;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("sample weights must sum to 1");
  return std::sqrt(acc);
}

}  // namespace reas
