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

#ifndef REAS_PAULI_HPP
#define REAS_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reas/rng.hpp"

namespace reas {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// +1 if two Pauli strings commute, -1 if they anti-commute.
class SignFactor {
public:
  SignFactor() : value_(1) {}
  explicit SignFactor(int v);
  int value() const { return value_; }
  SignFactor operator*(SignFactor o) const { return SignFactor(value_ * o.value_); }
  bool operator==(SignFactor o) const { return value_ == o.value_; }

private:
  int value_;
};

// n-qubit Pauli operator in the symplectic bit-pair encoding: qubit q is
// (x_q, z_q) with 00=I, 10=X, 11=Y, 01=Z, plus a global phase i^k.
// Bit q of the words corresponds to qubit q; the leftmost character of the
// text form is qubit 0.
class PauliString {
public:
  PauliString() : n_(0), x_(0), z_(0), phase_exp_(0) {}
  PauliString(int n, uint64_t x_bits, uint64_t z_bits, int phase_exp = 0);

  static PauliString identity(int n) { return PauliString(n, 0, 0, 0); }

  // Parses "[+|-|i|-i]<chars in IXYZ>", e.g. "-iXZY". Leftmost char = qubit 0.
  static PauliString from_text(const std::string& text);

  // Single-qubit Pauli `c` placed on `qubit` of an n-qubit identity string.
  static PauliString single(int n, int qubit, char c);

  // Uniform over all 4^n phase-free strings; phase +1.
  static PauliString sample_uniform(int n, Philox& rng);

  int n() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  int phase_exp() const { return phase_exp_; }
  Complex phase() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;
  std::vector<int> support() const;
  char char_at(int qubit) const;

  bool commutes_with(const PauliString& other) const;
  PauliString with_phase_exp(int k) const { return PauliString(n_, x_, z_, k); }

  // Embeds a string defined on `qubits` into a width-n identity string.
  static PauliString embed(int n, const std::vector<int>& qubits,
                           const PauliString& local);

  // Restriction to the listed qubits (phase kept).
  PauliString restrict_to(const std::vector<int>& qubits) const;

  std::string text() const;

  // Dense 2^n x 2^n realization, phase * kron over qubits (qubit 0 leftmost
  // factor, i.e. most significant index bit).
  Matrix to_matrix() const;

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && phase_exp_ == o.phase_exp_;
  }
  bool same_pattern(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }

private:
  int n_;
  uint64_t x_;
  uint64_t z_;
  int phase_exp_;  // power of i, 0..3
};

// Matrix product a*b including the accumulated {+-1, +-i} phase.
PauliString multiply(const PauliString& a, const PauliString& b);

// +1 iff the symplectic inner product of a and b vanishes mod 2 (AB = s BA).
SignFactor commutation_sign(const PauliString& a, const PauliString& b);

// The correlated insertion between consecutive draws: multiply(v_k, v_j)
// with the {+-1, +-i} phase discarded. Global phase is irrelevant to every
// consumer, so the convention is phase +1.
PauliString correlated_difference(const PauliString& v_j, const PauliString& v_k);

}  // namespace reas

#endif  // REAS_PAULI_HPP
