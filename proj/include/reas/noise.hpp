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

#ifndef REAS_NOISE_HPP
#define REAS_NOISE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reas/circuit.hpp"
#include "reas/dense.hpp"
#include "reas/dress.hpp"
#include "reas/pauli.hpp"
#include "reas/state.hpp"

namespace reas {

// ---------------------------------------------------------------------------
// Coherent perturbations I + i eps C_s with C_s = sum_w (abar_w + s dalpha_w) w
// ---------------------------------------------------------------------------

class CoherentError {
public:
  struct Term {
    PauliString pauli;
    Complex abar;
    Complex dalpha;
  };

  // Identity terms only add a global phase at first order and are dropped.
  CoherentError(int n, double epsilon, std::vector<Term> terms);

  // C_s = (abar + s dalpha) * axis: a pure rotation-angle perturbation.
  static CoherentError overrotation(const PauliString& axis, double epsilon,
                                    double abar, double dalpha);

  int n() const { return n_; }
  double epsilon() const { return epsilon_; }
  const std::vector<Term>& terms() const { return terms_; }

  Matrix c_matrix(int sign) const;
  // exactify(I + i eps C_s): the polar projection onto the unitary group;
  // differs from I + i eps C_s at order eps^2.
  Matrix realization(int sign) const;

  // True when the error is a single real term on `axis`, so the realization
  // is the rotation exp(i atan(eps a) axis).
  bool is_pure_overrotation(const PauliString& axis) const;
  double overrotation_coefficient(int sign) const;

  // Scales coefficients so that max over signs of ||C_s||_op is at most 1.
  CoherentError normalized() const;

private:
  int n_;
  double epsilon_;
  std::vector<Term> terms_;
};

// gate * exactify(I + i eps C_s); the error acts before the gate.
Matrix apply_coherent(const Matrix& gate_unitary, const CoherentError& err,
                      SignFactor s);

// ---------------------------------------------------------------------------
// Interaction Hamiltonians on system (+) environment
// ---------------------------------------------------------------------------

// Pauli terms an interaction Hamiltonian may contain. The standard family is
// every single-qubit Pauli plus two-qubit Paulis on each S_q E_q pair; the
// general family allows two-qubit terms on every pair.
struct PauliTermFamily {
  int n_sys = 0;
  int n_env = 0;
  std::vector<PauliString> terms;  // width n_sys + n_env, phase +1

  static PauliTermFamily standard(int n_sys, int n_env);
  static PauliTermFamily all_two_body(int n_sys, int n_env);

  int n_total() const { return n_sys + n_env; }
  int size() const { return static_cast<int>(terms.size()); }
  int index_of(const PauliString& pattern) const;  // -1 when absent

  // Dense realizations, built on first use.
  const std::vector<Matrix>& term_matrices() const;

private:
  mutable std::vector<Matrix> matrices_;
};

struct Bias {
  PauliString term;  // full system+env width
  double factor = 1.0;
};

// One interaction Hamiltonian: gamma scale and a Hermitian H with unit
// Frobenius norm, realized as the unitary exp(-i gamma H).
struct EnvNoise {
  double gamma = 0;
  int n_sys = 0;
  int n_env = 0;
  Matrix hamiltonian;
  std::vector<double> coefficients;  // per term, family order (+ designated)
  PauliTermFamily family;
  std::optional<PauliString> designated;  // bias term appended to the family

  Matrix propagator() const { return hermitian_rotation(hamiltonian, gamma); }
};

// H = sum_i c_i P_i with iid normal coefficients, optionally one designated
// term boosted by bias.factor (appended when absent from the family), then
// normalized to unit Frobenius norm.
EnvNoise random_interaction_hamiltonian(int n_sys, int n_env, double gamma,
                                        Philox& rng,
                                        const std::optional<Bias>& bias = {},
                                        const PauliTermFamily* family = nullptr);

void apply_env_noise(StateVector& state, const EnvNoise& noise);
Matrix apply_env_noise(const Matrix& unitary, const EnvNoise& noise);

// ---------------------------------------------------------------------------
// Canonical single-qubit channels realized as system-environment unitaries
// ---------------------------------------------------------------------------

struct ChannelSpec {
  enum class Kind { kDepolarizing, kAmplitudeDamping, kDephasing };
  Kind kind = Kind::kDephasing;
  double strength = 0;  // p, or gamma for amplitude damping

  double delta_t() const;
};

struct EnvChannelRealization {
  Matrix unitary;    // 4x4 on system (MSB) x environment (LSB)
  Matrix env_state;  // 2x2 initial environment density matrix
};

EnvChannelRealization channel_env_unitary(const ChannelSpec& spec);

// tr_env[ U (rho x env_state) U^dag ]
Matrix apply_env_channel(const EnvChannelRealization& r, const Matrix& rho);

// ---------------------------------------------------------------------------
// Noise bindings: how a model attaches error realizations to physical ops
// ---------------------------------------------------------------------------

struct GateRealization {
  double extra_angle = 0;            // added to the executed rotation angle
  std::optional<Matrix> pre_full;    // applied before the op, full register
  std::optional<Matrix> post_full;   // applied after the op, full register
};

class NoiseBinding {
public:
  virtual ~NoiseBinding() = default;
  virtual int n_sys() const = 0;
  virtual int n_env() const = 0;
  // Must be a pure function of (op, sample_id); draws are derived from
  // internal seeds so shots replay deterministically.
  virtual GateRealization realize(const PhysicalOp& op, uint64_t sample_id) const = 0;
  int n_total() const { return n_sys() + n_env(); }
};

class NoNoise : public NoiseBinding {
public:
  NoNoise(int n_sys, int n_env) : n_sys_(n_sys), n_env_(n_env) {}
  int n_sys() const override { return n_sys_; }
  int n_env() const override { return n_env_; }
  GateRealization realize(const PhysicalOp&, uint64_t) const override {
    return {};
  }

private:
  int n_sys_, n_env_;
};

// Per-gate-type coherent errors, with an optional error on every insertion.
class CoherentNoiseModel : public NoiseBinding {
public:
  CoherentNoiseModel(int n_sys, int n_env) : n_sys_(n_sys), n_env_(n_env) {}

  void set_type_error(const std::string& type_key, CoherentError err);
  // interior_only restricts the error to the correlated-difference gates
  // between blocks, leaving the leading/trailing insertions clean.
  void set_insertion_error(CoherentError err, bool interior_only = false);

  int n_sys() const override { return n_sys_; }
  int n_env() const override { return n_env_; }
  GateRealization realize(const PhysicalOp& op, uint64_t sample_id) const override;

private:
  int n_sys_, n_env_;
  std::map<std::string, CoherentError> type_errors_;
  std::optional<CoherentError> insertion_error_;
  bool insertion_interior_only_ = false;
};

// Decoherence-style interaction noise: after each op apply
// exp(-i gamma (Hbar + s_eff dH)) on system+environment, where s_eff is the
// op's sign factor for drive-coupled rotations and +1 otherwise. Hbar and dH
// are drawn per gate type or per gate instance from the term family, with
// optional boosting of the gate's own axis (bias) and optional removal of
// dH's gate-axis x I_env component (projection).
class InteractionNoiseModel : public NoiseBinding {
public:
  struct Options {
    int n_sys = 2;
    int n_env = 2;
    double gamma = 0.01;
    enum class Assign { kPerType, kPerInstance };
    Assign assign = Assign::kPerInstance;
    bool bias_gate_axis = false;
    double bias_factor = 1.0;
    bool project_gate_axis = false;
    bool insertions_noisy = true;
    uint64_t seed = 0;
    PauliTermFamily family;  // defaults to standard(n_sys, n_env)
  };

  explicit InteractionNoiseModel(Options opt);

  // Fixes per-type draws for the given gate types (per-type mode only).
  void draw_type_noise(const std::vector<RotationGate>& types, uint64_t trial);

  // First-order rotation-angle shift induced on the gate type:
  // gamma * (dH's gate-axis x I_env coefficient).
  double theory_shift(const std::string& type_key) const;

  int n_sys() const override { return opt_.n_sys; }
  int n_env() const override { return opt_.n_env; }
  GateRealization realize(const PhysicalOp& op, uint64_t sample_id) const override;

  // Both sign realizations of a rotation op, for averaged propagation.
  std::pair<Matrix, Matrix> op_unitaries(const PhysicalOp& op,
                                         uint64_t sample_id) const;

  // Exact second-order mean (over draws) of one insertion's noise channel.
  void apply_insertion_mean(Matrix& rho) const;
  bool insertions_noisy() const { return opt_.insertions_noisy; }

  const Options& options() const { return opt_; }

private:
  struct PairDraw {
    Eigen::VectorXd cbar;
    Eigen::VectorXd cdelta;
    std::optional<PauliString> extra_term;
    double delta_axis_coeff = 0;
  };

  PairDraw draw_pair(Philox& rng, const PauliString* gate_axis_sys) const;
  Matrix build_h(const Eigen::VectorXd& coeffs,
                 const std::optional<PauliString>& extra, double extra_coeff) const;
  Matrix exponent(const PairDraw& d, int sign) const;
  PauliString widened_axis(const PauliString& sys_axis) const;

  Options opt_;
  struct TypeNoise {
    Matrix u_plus;
    Matrix u_minus;
    double theory_shift = 0;
  };
  std::map<std::string, TypeNoise> per_type_;
};

}  // namespace reas

#endif  // REAS_NOISE_HPP
