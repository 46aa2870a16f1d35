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

#include "reas/rc.hpp"

#include <cmath>
#include <stdexcept>

namespace reas {

namespace {

using M2 = Eigen::Matrix2cd;

const M2& pauli_matrix(int label) {
  static const M2 mats[4] = {
      (M2() << 1, 0, 0, 1).finished(),
      (M2() << 0, 1, 1, 0).finished(),
      (M2() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (M2() << 1, 0, 0, -1).finished(),
  };
  return mats[label];
}

M2 rz(double t) {
  M2 m = M2::Zero();
  m(0, 0) = std::exp(Complex(0, -t));
  m(1, 1) = std::exp(Complex(0, t));
  return m;
}

bool equals_z_up_to_phase(const M2& m) {
  // |tr(Z m)| = 2 exactly when m is Z up to a scalar phase (m unitary).
  Complex tr = m(0, 0) - m(1, 1);
  return std::abs(tr) > 2.0 - 1e-9;
}

// Error factor on noisy elementary gates: exactified I + i eps Z.
M2 z_error_factor(double epsilon) { return rz(-std::atan(epsilon)); }

// Pauli product pattern (phase dropped): labels compose by XOR in the
// (x, z) bit encoding I=00, X=10, Y=11, Z=01.
int pauli_product_label(int a, int b) {
  auto bits = [](int l) -> std::pair<int, int> {
    switch (l) {
      case 0: return {0, 0};
      case 1: return {1, 0};
      case 2: return {1, 1};
      default: return {0, 1};
    }
  };
  auto [ax, az] = bits(a);
  auto [bx, bz] = bits(b);
  int x = ax ^ bx, z = az ^ bz;
  if (x == 0 && z == 0) return 0;
  if (x == 1 && z == 0) return 1;
  if (x == 1 && z == 1) return 2;
  return 3;
}

constexpr double kSAngle = M_PI / 4;
constexpr double kTAngle = M_PI / 8;
constexpr int64_t kExhaustiveCap = 65536;  // 4^8 draws

}  // namespace

RcCircuit rc_compile(int depth, Philox& rng) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  RcCircuit c;
  c.depth = depth;
  for (int i = 0; i < depth; ++i)
    c.twirls.push_back(static_cast<int>(rng.uniform_int(4)));
  return c;
}

Matrix st_ideal_unitary(int depth) {
  M2 s = rz(kSAngle), t = rz(kTAngle);
  M2 u = M2::Identity();
  for (int i = 0; i < depth + 1; ++i) u = s * u;
  for (int i = 0; i < depth; ++i) u = t * u;
  return u;
}

Matrix rc_unitary(const RcCircuit& c, double epsilon) {
  M2 s = rz(kSAngle), t = rz(kTAngle);
  M2 err = z_error_factor(epsilon);
  M2 u = M2::Identity();

  // First easy slot: S then the standalone twirl sigma_{j_1}.
  u = s * u;
  {
    const M2& tw = pauli_matrix(c.twirls[0]);
    M2 gate = tw;
    if (c.twirls[0] == 3) gate = gate * err;
    u = gate * u;
  }
  u = t * u;  // hard gate 1

  for (int l = 2; l <= c.depth; ++l) {
    // Merged easy gate sigma_{j_l} S T sigma_{j_{l-1}} T^dag.
    M2 merged = pauli_matrix(c.twirls[static_cast<size_t>(l - 1)]) * s * t *
                pauli_matrix(c.twirls[static_cast<size_t>(l - 2)]) * t.adjoint();
    M2 gate = merged;
    if (equals_z_up_to_phase(merged)) gate = merged * err;
    u = gate * u;
    u = t * u;  // hard gate l
  }

  // Final merged easy gate S T sigma_{j_L} T^dag (never Z up to phase).
  M2 last = s * t * pauli_matrix(c.twirls.back()) * t.adjoint();
  if (equals_z_up_to_phase(last)) last = last * z_error_factor(epsilon);
  u = last * u;
  return u;
}

double rc_closed_form_coefficient(int depth) {
  return 0.25 - (depth - 1) / 8.0;
}

Matrix rc_first_order_operator(int depth) {
  return rc_closed_form_coefficient(depth) * st_ideal_unitary(depth) *
         pauli_matrix(3);
}

StDressedDraw st_dressed_draw(int depth, Philox& rng) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  StDressedDraw d;
  d.depth = depth;
  for (int i = 0; i < 2 * depth + 1; ++i)
    d.draws.push_back(static_cast<int>(rng.uniform_int(4)));
  return d;
}

void st_dressed_unitaries(const StDressedDraw& d, double epsilon, Matrix* noisy,
                          Matrix* clean) {
  int num_gates = 2 * d.depth + 1;
  M2 err = z_error_factor(epsilon);
  M2 u_eps = M2::Identity();
  M2 u0 = M2::Identity();

  auto apply_insertion = [&](int label) {
    const M2& p = pauli_matrix(label);
    u0 = p * u0;
    if (label == 3)
      u_eps = p * err * u_eps;
    else
      u_eps = p * u_eps;
  };

  apply_insertion(d.draws[0]);  // sigma_{v_1}
  for (int k = 1; k <= num_gates; ++k) {
    double theta = (k % 2 == 1) ? kSAngle : kTAngle;
    // Sign factor against the current draw: Z commutes with I, Z.
    int v = d.draws[static_cast<size_t>(k - 1)];
    int sign = (v == 0 || v == 3) ? 1 : -1;
    M2 gate = rz(sign * theta);  // rotation gates carry no error here
    u0 = gate * u0;
    u_eps = gate * u_eps;
    if (k < num_gates) {
      int mid = pauli_product_label(v, d.draws[static_cast<size_t>(k)]);
      apply_insertion(mid);
    } else {
      apply_insertion(v);  // trailing sigma_{v_B}
    }
  }
  if (noisy) *noisy = u_eps;
  if (clean) *clean = u0;
}

namespace {

template <typename PerDraw>
void for_each_exhaustive(int num_vars, PerDraw body) {
  std::vector<int> labels(static_cast<size_t>(num_vars), 0);
  while (true) {
    body(labels);
    int pos = 0;
    while (pos < num_vars) {
      if (++labels[static_cast<size_t>(pos)] < 4) break;
      labels[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == num_vars) break;
  }
}

double coefficient_at(int depth, double eps, bool rc_mode, uint64_t seed,
                      int mc_draws, bool* exhaustive, int64_t* used) {
  int num_vars = rc_mode ? depth : 2 * depth + 1;
  double ln_count = num_vars * std::log(4.0);
  bool use_exhaustive = ln_count <= std::log(static_cast<double>(kExhaustiveCap)) + 1e-9;
  Complex acc = 0;
  int64_t count = 0;
  Matrix ideal = st_ideal_unitary(depth);

  auto accumulate = [&](const std::vector<int>& labels) {
    M2 u_eps, u0;
    if (rc_mode) {
      RcCircuit c{depth, labels};
      u_eps = rc_unitary(c, eps);
      u0 = ideal;
    } else {
      StDressedDraw d{depth, labels};
      Matrix ne, cl;
      st_dressed_unitaries(d, eps, &ne, &cl);
      u_eps = ne;
      u0 = cl;
    }
    M2 dmat = u0.adjoint() * u_eps;
    acc += (pauli_matrix(3) * dmat).trace();
    ++count;
  };

  if (use_exhaustive) {
    for_each_exhaustive(num_vars, accumulate);
  } else {
    Philox rng(seed, derive_stream({0xAD, static_cast<uint64_t>(depth)}));
    std::vector<int> labels(static_cast<size_t>(num_vars));
    for (int i = 0; i < mc_draws; ++i) {
      for (auto& l : labels) l = static_cast<int>(rng.uniform_int(4));
      accumulate(labels);
    }
  }
  if (exhaustive) *exhaustive = use_exhaustive;
  if (used) *used = count;
  return (acc / static_cast<double>(count)).imag() / (2 * eps);
}

LinearCoefficient linear_coefficient(int depth, double eps_a, double eps_b,
                                     bool rc_mode, uint64_t seed, int mc_draws) {
  LinearCoefficient out;
  double ca = coefficient_at(depth, eps_a, rc_mode, seed, mc_draws,
                             &out.exhaustive, &out.draws);
  double cb =
      coefficient_at(depth, eps_b, rc_mode, seed, mc_draws, nullptr, nullptr);
  // The finite-difference estimates differ from the limit at O(eps^2);
  // a Richardson step removes the leading correction.
  double r = eps_a / eps_b;
  double r2 = r * r;
  out.value = (r2 * cb - ca) / (r2 - 1.0);
  out.richardson_gap = std::abs(ca - cb);
  return out;
}

double rms_trace_distance(int depth, double epsilon, int draws, uint64_t seed,
                          bool rc_mode) {
  Eigen::Vector2cd plus;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Eigen::Vector2cd ideal_out = st_ideal_unitary(depth) * plus;
  Philox rng(seed, derive_stream({0xF18, static_cast<uint64_t>(depth),
                                  rc_mode ? 1u : 0u}));
  double acc = 0;
  for (int i = 0; i < draws; ++i) {
    Eigen::Vector2cd out;
    if (rc_mode) {
      RcCircuit c = rc_compile(depth, rng);
      out = rc_unitary(c, epsilon) * plus;
    } else {
      StDressedDraw d = st_dressed_draw(depth, rng);
      Matrix noisy;
      st_dressed_unitaries(d, epsilon, &noisy, nullptr);
      out = noisy * plus;
    }
    double overlap = std::norm(ideal_out.dot(out));
    acc += std::max(0.0, 1.0 - overlap);  // squared trace distance
  }
  return std::sqrt(acc / draws);
}

}  // namespace

LinearCoefficient rc_linear_coefficient(int depth, double eps_a, double eps_b,
                                        uint64_t seed, int mc_draws) {
  return linear_coefficient(depth, eps_a, eps_b, true, seed, mc_draws);
}

LinearCoefficient st_dressed_linear_coefficient(int depth, double eps_a,
                                                double eps_b, uint64_t seed,
                                                int mc_draws) {
  return linear_coefficient(depth, eps_a, eps_b, false, seed, mc_draws);
}

double rc_rms_trace_distance(int depth, double epsilon, int draws,
                             uint64_t seed) {
  return rms_trace_distance(depth, epsilon, draws, seed, true);
}

double st_dressed_rms_trace_distance(int depth, double epsilon, int draws,
                                     uint64_t seed) {
  return rms_trace_distance(depth, epsilon, draws, seed, false);
}

}  // namespace reas
