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

#include "reas/calibrate.hpp"

#include <cmath>
#include <stdexcept>

#include "reas/twirl_average.hpp"

namespace reas {

namespace {

double wrap_angle(double x) {
  x = std::fmod(x, 2 * M_PI);
  if (x <= -M_PI) x += 2 * M_PI;
  if (x > M_PI) x -= 2 * M_PI;
  return x;
}

double circ_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }

double sample_probability(double p, int shots, Philox* rng) {
  if (shots <= 0) return p;
  if (!rng) throw std::invalid_argument("finite shots need an rng");
  double clamped = std::min(1.0, std::max(0.0, p));
  return static_cast<double>(rng->binomial(static_cast<uint64_t>(shots), clamped)) /
         shots;
}

}  // namespace

PhaseEstimate rpe_estimate(const ProbabilityOracle& oracle, int k_max,
                           int shots_per_k, Philox* rng) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  PhaseEstimate est;
  est.shots_per_k = shots_per_k;
  double angle = 0;
  double window = M_PI;  // current confidence radius
  std::vector<double> raw_angles;
  for (int k = 1; k <= k_max; k *= 2) {
    est.k_schedule.push_back(k);
    auto [p0, pp] = oracle(k);
    p0 = sample_probability(p0, shots_per_k, rng);
    pp = sample_probability(pp, shots_per_k, rng);
    double cx = 2 * p0 - 1, sx = 2 * pp - 1;
    // A collapsed signal cannot resolve an octant; the record is unusable.
    if (std::sqrt(cx * cx + sx * sx) < 0.1) est.consistent = false;
    double raw = std::atan2(sx, cx);  // k*A mod 2pi
    raw_angles.push_back(raw);
    if (k == 1) {
      angle = raw;
      window = M_PI / 2;
      continue;
    }
    // Candidates (raw + 2 pi m)/k near the running estimate.
    double m_star = std::round((angle * k - raw) / (2 * M_PI));
    double best = 0, best_dist = 1e300;
    for (int dm = -1; dm <= 1; ++dm) {
      double cand = wrap_angle((raw + 2 * M_PI * (m_star + dm)) / k);
      double dist = circ_dist(cand, angle);
      if (dist < best_dist) {
        best_dist = dist;
        best = cand;
      }
    }
    if (best_dist > window + M_PI / (2 * k) + 1e-9) est.consistent = false;
    angle = best;
    window = M_PI / (2 * k);
  }
  est.angle_hat = wrap_angle(angle);
  // Retrospective check: the final phase must explain every stage's raw
  // angle. Corrupted stages leave residuals near pi/2 (the branch spacing
  // caps them); honest shot noise at the supported budgets stays an order
  // of magnitude below this threshold.
  {
    int k = 1;
    for (double raw : raw_angles) {
      if (circ_dist(k * est.angle_hat, raw) > 1.25) est.consistent = false;
      k *= 2;
    }
  }
  // Heisenberg-limited spread: the final stage dominates.
  est.std_dev = (shots_per_k > 0)
                    ? 2.0 / (k_max * std::sqrt(static_cast<double>(shots_per_k)))
                    : 1e-12;
  return est;
}

CalibrationDesign calibration_design(const RotationGate& g) {
  int n = g.axis().n();
  int q0 = g.qubits().front();
  char axis_char = g.axis().char_at(q0);
  // Any single-qubit Pauli that anticommutes on the first support qubit.
  char partner = (axis_char == 'Z') ? 'X' : 'Z';
  CalibrationDesign d;
  d.prep = PauliString::single(n, q0, partner);
  d.obs_cos = d.prep;
  d.obs_sin = multiply(d.prep, g.axis()).with_phase_exp(
      (multiply(d.prep, g.axis()).phase_exp() + 1) % 4);
  if (d.obs_sin.phase_exp() == 1 || d.obs_sin.phase_exp() == 3)
    throw std::logic_error("sine observable must be Hermitian");
  return d;
}

DressedCircuit build_calibration_circuit(const Layer& layer, int n, int K,
                                         Philox& rng) {
  if (K < 1) throw std::invalid_argument("need at least one repetition");
  LayeredCircuit reps;
  reps.n = n;
  for (int k = 0; k < K; ++k) reps.append_block(Block{{layer}});
  return dress(reps, rng);
}

namespace {

// +1 eigenstate of the single-qubit prep Pauli on its qubit, |0> elsewhere.
StateVector prepare_state(const CalibrationDesign& design, int n_sys, int n_env) {
  int q = design.prep.support().front();
  char c = design.prep.char_at(q);
  Eigen::Vector2cd ket;
  if (c == 'Z') {
    ket << 1, 0;
  } else if (c == 'X') {
    ket << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  } else {
    ket << 1 / std::sqrt(2.0), Complex(0, 1) / std::sqrt(2.0);
  }
  return StateVector::product_state(n_sys, n_env, {{q, ket}});
}

// Exact stage probabilities for the twirled calibration circuit, evaluated
// incrementally over repetitions.
std::map<int, std::pair<double, double>> twirled_probabilities(
    const RotationGate& gate, int n_sys, const InteractionNoiseModel& noise,
    const CalibrationDesign& design, int k_max) {
  LayeredCircuit one;
  one.n = n_sys;
  one.append_block(Block{{Layer{{gate}}}});
  DressedCircuit plan = undressed(one);
  auto block_ops = rotations_by_block(plan);

  StateVector init = prepare_state(design, n_sys, noise.n_env());
  ConditionalTwirlPropagator prop(init, &noise);
  prop.leading_insertion();

  std::map<int, std::pair<double, double>> out;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) prop.boundary_step();
    prop.block_step(block_ops[0], /*sample_id=*/0, {});
    if ((k & (k - 1)) == 0) {
      Matrix rho = prop.finalize();
      double c = expectation_density(rho, design.obs_cos, n_sys, noise.n_env());
      double s = expectation_density(rho, design.obs_sin, n_sys, noise.n_env());
      out[k] = {(1 + c) / 2, (1 + s) / 2};
    }
  }
  return out;
}

std::map<int, std::pair<double, double>> naive_probabilities(
    const RotationGate& gate, int n_sys, const InteractionNoiseModel& noise,
    const CalibrationDesign& design, int k_max) {
  LayeredCircuit one;
  one.n = n_sys;
  one.append_block(Block{{Layer{{gate}}}});
  DressedCircuit plan = undressed(one);

  StateVector state = prepare_state(design, n_sys, noise.n_env());
  std::map<int, std::pair<double, double>> out;
  for (int k = 1; k <= k_max; ++k) {
    state = run_shot(plan, noise, std::move(state), /*sample_id=*/0);
    if ((k & (k - 1)) == 0) {
      double c = expectation(state, design.obs_cos);
      double s = expectation(state, design.obs_sin);
      out[k] = {(1 + c) / 2, (1 + s) / 2};
    }
  }
  return out;
}

}  // namespace

std::map<std::string, ShiftEstimate> estimate_shift(
    const Layer& layer, int n_sys, const InteractionNoiseModel& noise,
    int k_max, int shots_per_k, CalibrationMode mode, uint64_t seed) {
  if (noise.options().assign != InteractionNoiseModel::Options::Assign::kPerType)
    throw std::invalid_argument("calibration requires per-type noise draws");
  std::map<std::string, ShiftEstimate> out;
  size_t gate_index = 0;
  for (const auto& gate : layer.gates) {
    CalibrationDesign design = calibration_design(gate);
    int k = k_max;
    PhaseEstimate pe;
    while (true) {
      auto probs = (mode == CalibrationMode::kTwirled)
                       ? twirled_probabilities(gate, n_sys, noise, design, k)
                       : naive_probabilities(gate, n_sys, noise, design, k);
      Philox rng = make_stream(seed, {0xCA1B, gate_index,
                                      static_cast<uint64_t>(k),
                                      mode == CalibrationMode::kTwirled ? 1u : 0u});
      pe = rpe_estimate([&](int kk) { return probs.at(kk); }, k, shots_per_k,
                        &rng);
      if (pe.consistent || k <= 8) break;
      k /= 2;  // phase wrapped beyond the tracking window
    }
    // The accumulated phase doubles the rotation angle: A = 2(theta + shift).
    double t_hat = pe.angle_hat / 2;
    double delta = t_hat - gate.theta();
    // Reduce mod pi into (-pi/2, pi/2]: rotations are periodic in pi up to
    // global phase.
    delta = std::remainder(delta, M_PI);
    ShiftEstimate se;
    se.delta_theta = delta;
    se.phase = pe;
    out[gate.type_key()] = se;
    ++gate_index;
  }
  return out;
}

}  // namespace reas
