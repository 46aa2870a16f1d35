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

#include "reas/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "reas/kernels.hpp"

namespace reas {

// ---------------------------------------------------------------------------
// CoherentError
// ---------------------------------------------------------------------------

CoherentError::CoherentError(int n, double epsilon, std::vector<Term> terms)
    : n_(n), epsilon_(epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  for (auto& t : terms) {
    if (t.pauli.n() != n)
      throw std::invalid_argument("coherent error term width mismatch");
    if (t.pauli.is_identity()) continue;  // pure global phase at first order
    t.pauli = t.pauli.with_phase_exp(0);
    terms_.push_back(t);
  }
}

CoherentError CoherentError::overrotation(const PauliString& axis, double epsilon,
                                          double abar, double dalpha) {
  return CoherentError(axis.n(), epsilon,
                       {{axis, Complex(abar, 0), Complex(dalpha, 0)}});
}

Matrix CoherentError::c_matrix(int sign) const {
  int64_t dim = int64_t{1} << n_;
  Matrix c = Matrix::Zero(dim, dim);
  for (const auto& t : terms_)
    c += (t.abar + static_cast<double>(sign) * t.dalpha) * t.pauli.to_matrix();
  return c;
}

Matrix CoherentError::realization(int sign) const {
  int64_t dim = int64_t{1} << n_;
  Matrix m = Matrix::Identity(dim, dim) + Complex(0, epsilon_) * c_matrix(sign);
  return polar_unitary(m);
}

bool CoherentError::is_pure_overrotation(const PauliString& axis) const {
  if (terms_.size() != 1) return false;
  const Term& t = terms_.front();
  return t.pauli.same_pattern(axis) && std::abs(t.abar.imag()) < 1e-15 &&
         std::abs(t.dalpha.imag()) < 1e-15;
}

double CoherentError::overrotation_coefficient(int sign) const {
  const Term& t = terms_.front();
  return t.abar.real() + sign * t.dalpha.real();
}

CoherentError CoherentError::normalized() const {
  double norm = 0;
  for (int sign : {+1, -1}) {
    Eigen::JacobiSVD<Matrix> svd(c_matrix(sign));
    norm = std::max(norm, svd.singularValues().maxCoeff());
  }
  CoherentError out = *this;
  if (norm > 1.0)
    for (auto& t : out.terms_) {
      t.abar /= norm;
      t.dalpha /= norm;
    }
  return out;
}

Matrix apply_coherent(const Matrix& gate_unitary, const CoherentError& err,
                      SignFactor s) {
  Matrix factor = err.realization(s.value());
  if (factor.rows() != gate_unitary.rows())
    throw std::invalid_argument("dimension mismatch");
  return gate_unitary * factor;
}

// ---------------------------------------------------------------------------
// Term families and interaction Hamiltonians
// ---------------------------------------------------------------------------

PauliTermFamily PauliTermFamily::standard(int n_sys, int n_env) {
  PauliTermFamily f;
  f.n_sys = n_sys;
  f.n_env = n_env;
  int n = n_sys + n_env;
  for (int q = 0; q < n; ++q)
    for (char c : {'X', 'Y', 'Z'})
      f.terms.push_back(PauliString::single(n, q, c));
  for (int q = 0; q < std::min(n_sys, n_env); ++q)
    for (char a : {'X', 'Y', 'Z'})
      for (char b : {'X', 'Y', 'Z'}) {
        std::string text(static_cast<size_t>(n), 'I');
        text[static_cast<size_t>(q)] = a;
        text[static_cast<size_t>(n_sys + q)] = b;
        f.terms.push_back(PauliString::from_text(text));
      }
  return f;
}

PauliTermFamily PauliTermFamily::all_two_body(int n_sys, int n_env) {
  PauliTermFamily f;
  f.n_sys = n_sys;
  f.n_env = n_env;
  int n = n_sys + n_env;
  for (int q = 0; q < n; ++q)
    for (char c : {'X', 'Y', 'Z'})
      f.terms.push_back(PauliString::single(n, q, c));
  for (int q = 0; q < n; ++q)
    for (int r = q + 1; r < n; ++r)
      for (char a : {'X', 'Y', 'Z'})
        for (char b : {'X', 'Y', 'Z'}) {
          std::string text(static_cast<size_t>(n), 'I');
          text[static_cast<size_t>(q)] = a;
          text[static_cast<size_t>(r)] = b;
          f.terms.push_back(PauliString::from_text(text));
        }
  return f;
}

int PauliTermFamily::index_of(const PauliString& pattern) const {
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].same_pattern(pattern)) return static_cast<int>(i);
  return -1;
}

const std::vector<Matrix>& PauliTermFamily::term_matrices() const {
  if (matrices_.empty())
    for (const auto& t : terms) matrices_.push_back(t.to_matrix());
  return matrices_;
}

EnvNoise random_interaction_hamiltonian(int n_sys, int n_env, double gamma,
                                        Philox& rng,
                                        const std::optional<Bias>& bias,
                                        const PauliTermFamily* family) {
  EnvNoise noise;
  noise.gamma = gamma;
  noise.n_sys = n_sys;
  noise.n_env = n_env;
  noise.family = family ? *family : PauliTermFamily::standard(n_sys, n_env);
  if (noise.family.terms.empty())
    throw std::invalid_argument("empty interaction term family");
  int n = n_sys + n_env;

  std::vector<PauliString> terms = noise.family.terms;
  int bias_index = -1;
  if (bias) {
    if (bias->term.n() != n)
      throw std::invalid_argument("bias term width mismatch");
    bias_index = noise.family.index_of(bias->term);
    if (bias_index < 0) {
      terms.push_back(bias->term.with_phase_exp(0));
      bias_index = static_cast<int>(terms.size()) - 1;
      noise.designated = bias->term.with_phase_exp(0);
    }
  }

  Eigen::VectorXd c(terms.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.normal();
  if (bias_index >= 0) c(bias_index) *= bias->factor;
  // ||H||_F = 1  <=>  sum c_i^2 = 2^-n for orthogonal Pauli terms.
  c *= 1.0 / (c.norm() * std::pow(2.0, n / 2.0));

  int64_t dim = int64_t{1} << n;
  noise.hamiltonian = Matrix::Zero(dim, dim);
  for (size_t i = 0; i < terms.size(); ++i)
    noise.hamiltonian += c(static_cast<Eigen::Index>(i)) * terms[i].to_matrix();
  noise.coefficients.assign(c.data(), c.data() + c.size());
  return noise;
}

void apply_env_noise(StateVector& state, const EnvNoise& noise) {
  if (state.n_total() != noise.n_sys + noise.n_env)
    throw std::invalid_argument("state and noise dimensions differ");
  state.amps = noise.propagator() * state.amps;
}

Matrix apply_env_noise(const Matrix& unitary, const EnvNoise& noise) {
  if (unitary.rows() != noise.hamiltonian.rows())
    throw std::invalid_argument("operator and noise dimensions differ");
  return noise.propagator() * unitary;
}

// ---------------------------------------------------------------------------
// Canonical channels
// ---------------------------------------------------------------------------

double ChannelSpec::delta_t() const {
  if (strength < 0 || strength > 1)
    throw std::invalid_argument("channel strength must lie in [0, 1]");
  double root = std::asin(std::sqrt(strength));
  switch (kind) {
    case Kind::kDepolarizing: return 0.5 * root;
    case Kind::kAmplitudeDamping: return root;
    case Kind::kDephasing: return root;
  }
  throw std::logic_error("unknown channel kind");
}

EnvChannelRealization channel_env_unitary(const ChannelSpec& spec) {
  double dt = spec.delta_t();
  Matrix xx = PauliString::from_text("XX").to_matrix();
  Matrix yy = PauliString::from_text("YY").to_matrix();
  Matrix zz = PauliString::from_text("ZZ").to_matrix();
  EnvChannelRealization out;
  switch (spec.kind) {
    case ChannelSpec::Kind::kDepolarizing:
      out.unitary = hermitian_rotation(xx + yy + zz, dt);
      out.env_state = 0.5 * Matrix::Identity(2, 2);
      break;
    case ChannelSpec::Kind::kAmplitudeDamping:
      out.unitary = hermitian_rotation(xx + yy, dt / 2);
      out.env_state = Matrix::Zero(2, 2);
      out.env_state(0, 0) = 1.0;
      break;
    case ChannelSpec::Kind::kDephasing:
      out.unitary = hermitian_rotation(zz, dt);
      out.env_state = 0.5 * Matrix::Identity(2, 2);
      break;
  }
  return out;
}

Matrix apply_env_channel(const EnvChannelRealization& r, const Matrix& rho) {
  Matrix joint = kron(rho, r.env_state);
  joint = r.unitary * joint * r.unitary.adjoint();
  Matrix out = Matrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int e = 0; e < 2; ++e) out(i, j) += joint(2 * i + e, 2 * j + e);
  return out;
}

// ---------------------------------------------------------------------------
// CoherentNoiseModel
// ---------------------------------------------------------------------------

void CoherentNoiseModel::set_type_error(const std::string& type_key,
                                        CoherentError err) {
  type_errors_.insert_or_assign(type_key, std::move(err));
}

void CoherentNoiseModel::set_insertion_error(CoherentError err,
                                             bool interior_only) {
  insertion_error_ = std::move(err);
  insertion_interior_only_ = interior_only;
}

GateRealization CoherentNoiseModel::realize(const PhysicalOp& op,
                                            uint64_t /*sample_id*/) const {
  GateRealization r;
  if (op.kind == PhysicalOp::Kind::kInsertion) {
    if (insertion_error_ && !(insertion_interior_only_ && op.edge_insertion))
      r.pre_full = insertion_error_->realization(+1);
    return r;
  }
  auto it = type_errors_.find(op.type_key);
  if (it == type_errors_.end()) return r;
  int s_eff = op.drive_coupled ? op.sign : 1;
  const CoherentError& err = it->second;
  if (err.is_pure_overrotation(op.axis)) {
    r.extra_angle = -std::atan(err.epsilon() * err.overrotation_coefficient(s_eff));
  } else {
    r.pre_full = err.realization(s_eff);
  }
  return r;
}

// ---------------------------------------------------------------------------
// InteractionNoiseModel
// ---------------------------------------------------------------------------

InteractionNoiseModel::InteractionNoiseModel(Options opt) : opt_(std::move(opt)) {
  if (opt_.family.terms.empty())
    opt_.family = PauliTermFamily::standard(opt_.n_sys, opt_.n_env);
  opt_.family.term_matrices();  // warm the cache; realize() runs concurrently
}

PauliString InteractionNoiseModel::widened_axis(const PauliString& sys_axis) const {
  std::vector<int> sys_qubits(static_cast<size_t>(opt_.n_sys));
  for (int q = 0; q < opt_.n_sys; ++q) sys_qubits[static_cast<size_t>(q)] = q;
  return PauliString::embed(opt_.n_sys + opt_.n_env, sys_qubits, sys_axis);
}

InteractionNoiseModel::PairDraw InteractionNoiseModel::draw_pair(
    Philox& rng, const PauliString* gate_axis_sys) const {
  int m = opt_.family.size();
  PairDraw d;
  d.cbar.resize(m);
  d.cdelta.resize(m);
  for (int i = 0; i < m; ++i) d.cbar(i) = rng.normal();
  for (int i = 0; i < m; ++i) d.cdelta(i) = rng.normal();

  int axis_index = -1;
  double extra_bar = 0, extra_delta = 0;
  std::optional<PauliString> wide_axis;
  if (gate_axis_sys) {
    wide_axis = widened_axis(*gate_axis_sys);
    axis_index = opt_.family.index_of(*wide_axis);
  }

  if (opt_.bias_gate_axis && wide_axis) {
    if (axis_index >= 0) {
      d.cbar(axis_index) *= opt_.bias_factor;
      d.cdelta(axis_index) *= opt_.bias_factor;
    } else {
      d.extra_term = *wide_axis;
      extra_bar = rng.normal() * opt_.bias_factor;
      extra_delta = rng.normal() * opt_.bias_factor;
    }
  }
  if (opt_.project_gate_axis && wide_axis) {
    if (axis_index >= 0) d.cdelta(axis_index) = 0;
    extra_delta = 0;
  }

  // Joint normalization: the realized exponent Hbar + s dH has unit
  // Frobenius norm in expectation over the sign.
  int n = opt_.n_sys + opt_.n_env;
  double norm2 = d.cbar.squaredNorm() + d.cdelta.squaredNorm() +
                 extra_bar * extra_bar + extra_delta * extra_delta;
  double scale = 1.0 / (std::sqrt(norm2) * std::pow(2.0, n / 2.0));
  d.cbar *= scale;
  d.cdelta *= scale;
  extra_bar *= scale;
  extra_delta *= scale;

  if (d.extra_term) {
    d.cbar.conservativeResize(m + 1);
    d.cdelta.conservativeResize(m + 1);
    d.cbar(m) = extra_bar;
    d.cdelta(m) = extra_delta;
    d.delta_axis_coeff = extra_delta;
  } else if (axis_index >= 0) {
    d.delta_axis_coeff = d.cdelta(axis_index);
  }
  return d;
}

Matrix InteractionNoiseModel::build_h(const Eigen::VectorXd& coeffs,
                                      const std::optional<PauliString>& extra,
                                      double extra_coeff) const {
  const auto& mats = opt_.family.term_matrices();
  int64_t dim = int64_t{1} << (opt_.n_sys + opt_.n_env);
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < opt_.family.size(); ++i)
    if (coeffs(i) != 0.0) h += coeffs(i) * mats[static_cast<size_t>(i)];
  if (extra && extra_coeff != 0.0) h += extra_coeff * extra->to_matrix();
  return h;
}

Matrix InteractionNoiseModel::exponent(const PairDraw& d, int sign) const {
  int m = opt_.family.size();
  Eigen::VectorXd combined = d.cbar.head(m) + sign * d.cdelta.head(m);
  double extra = 0;
  if (d.extra_term)
    extra = d.cbar(m) + sign * d.cdelta(m);
  return build_h(combined, d.extra_term, extra);
}

void InteractionNoiseModel::draw_type_noise(const std::vector<RotationGate>& types,
                                            uint64_t trial) {
  if (opt_.assign != Options::Assign::kPerType)
    throw std::logic_error("per-type draws requested on a per-instance model");
  per_type_.clear();
  for (size_t i = 0; i < types.size(); ++i) {
    const RotationGate& g = types[i];
    Philox rng = make_stream(opt_.seed, {0x7459, trial, i});
    PauliString axis = g.axis();
    PairDraw d = draw_pair(rng, &axis);
    TypeNoise tn;
    tn.u_plus = hermitian_rotation(exponent(d, +1), opt_.gamma);
    tn.u_minus = hermitian_rotation(exponent(d, -1), opt_.gamma);
    tn.theory_shift = opt_.gamma * d.delta_axis_coeff;
    per_type_.insert_or_assign(g.type_key(), std::move(tn));
  }
}

double InteractionNoiseModel::theory_shift(const std::string& type_key) const {
  auto it = per_type_.find(type_key);
  if (it == per_type_.end())
    throw std::invalid_argument("no per-type noise drawn for " + type_key);
  return it->second.theory_shift;
}

GateRealization InteractionNoiseModel::realize(const PhysicalOp& op,
                                               uint64_t sample_id) const {
  GateRealization r;
  if (op.kind == PhysicalOp::Kind::kInsertion) {
    if (!opt_.insertions_noisy) return r;
    Philox rng = make_stream(opt_.seed,
                             {0x1A5, sample_id, static_cast<uint64_t>(op.block)});
    PairDraw d = draw_pair(rng, nullptr);
    r.post_full = hermitian_rotation(exponent(d, +1), opt_.gamma);
    return r;
  }
  int s_eff = op.drive_coupled ? op.sign : 1;
  if (opt_.assign == Options::Assign::kPerType) {
    auto it = per_type_.find(op.type_key);
    if (it == per_type_.end())
      throw std::invalid_argument("no per-type noise drawn for " + op.type_key);
    r.post_full = (s_eff > 0) ? it->second.u_plus : it->second.u_minus;
    return r;
  }
  Philox rng = make_stream(
      opt_.seed, {0x2B6, sample_id, static_cast<uint64_t>(op.base_ordinal)});
  PauliString axis = op.axis;
  PairDraw d = draw_pair(rng, &axis);
  r.post_full = hermitian_rotation(exponent(d, s_eff), opt_.gamma);
  return r;
}

std::pair<Matrix, Matrix> InteractionNoiseModel::op_unitaries(
    const PhysicalOp& op, uint64_t sample_id) const {
  if (op.kind != PhysicalOp::Kind::kRotation)
    throw std::invalid_argument("op_unitaries expects a rotation");
  if (opt_.assign == Options::Assign::kPerType) {
    auto it = per_type_.find(op.type_key);
    if (it == per_type_.end())
      throw std::invalid_argument("no per-type noise drawn for " + op.type_key);
    if (!op.drive_coupled) return {it->second.u_plus, it->second.u_plus};
    return {it->second.u_plus, it->second.u_minus};
  }
  Philox rng = make_stream(
      opt_.seed, {0x2B6, sample_id, static_cast<uint64_t>(op.base_ordinal)});
  PauliString axis = op.axis;
  PairDraw d = draw_pair(rng, &axis);
  Matrix up = hermitian_rotation(exponent(d, +1), opt_.gamma);
  if (!op.drive_coupled) return {up, up};
  Matrix um = hermitian_rotation(exponent(d, -1), opt_.gamma);
  return {std::move(up), std::move(um)};
}

void InteractionNoiseModel::apply_insertion_mean(Matrix& rho) const {
  if (!opt_.insertions_noisy) return;
  // E[exp(-i g H) rho exp(i g H)] over the draw distribution equals
  //   rho - g^2 ( rho - (1/m) sum_T T rho T ) / 2^n + O(g^4),
  // since the normalized coefficients satisfy E[c_i c_j] = delta_ij/(m 2^n).
  int n = opt_.n_sys + opt_.n_env;
  double g2 = opt_.gamma * opt_.gamma / std::pow(2.0, n);
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& term : opt_.family.terms) {
    Matrix conj = rho;
    conjugate_pauli(conj, term);
    acc += conj;
  }
  rho = (1.0 - g2) * rho + (g2 / opt_.family.size()) * acc;
}

}  // namespace reas
