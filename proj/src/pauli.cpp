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

#include "reas/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "reas/dense.hpp"

namespace reas {

namespace {

constexpr int kMaxQubits = 64;

// i-power of the single-qubit product row*col in {I,X,Y,Z} label space:
// X*Y = iZ, Y*Z = iX, Z*X = iY and the reverse orders pick up i^3.
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},  // I*
    {0, 0, 1, 3},  // X*
    {0, 3, 0, 1},  // Y*
    {0, 1, 3, 0},  // Z*
};

inline int label_of(uint64_t x, uint64_t z, int q) {
  int xb = static_cast<int>((x >> q) & 1);
  int zb = static_cast<int>((z >> q) & 1);
  // 00=I, 10=X, 11=Y, 01=Z
  if (xb == 0 && zb == 0) return 0;
  if (xb == 1 && zb == 0) return 1;
  if (xb == 1 && zb == 1) return 2;
  return 3;
}

const Matrix& single_qubit_matrix(int label) {
  static const Matrix mats[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  return mats[label];
}

}  // namespace

SignFactor::SignFactor(int v) : value_(v) {
  if (v != 1 && v != -1) throw std::invalid_argument("SignFactor must be +1 or -1");
}

PauliString::PauliString(int n, uint64_t x_bits, uint64_t z_bits, int phase_exp)
    : n_(n), x_(x_bits), z_(z_bits), phase_exp_(((phase_exp % 4) + 4) % 4) {
  if (n < 0 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  if (n < kMaxQubits) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    if ((x_ & ~mask) || (z_ & ~mask))
      throw std::invalid_argument("pauli bits beyond qubit count");
  }
}

PauliString PauliString::from_text(const std::string& text) {
  size_t pos = 0;
  int phase_exp = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase_exp = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase_exp = (phase_exp + 1) % 4;
    ++pos;
  }
  uint64_t x = 0, z = 0;
  int n = 0;
  for (; pos < text.size(); ++pos, ++n) {
    if (n >= kMaxQubits) throw std::invalid_argument("pauli text too long");
    switch (text[pos]) {
      case 'I': break;
      case 'X': x |= uint64_t{1} << n; break;
      case 'Y': x |= uint64_t{1} << n; z |= uint64_t{1} << n; break;
      case 'Z': z |= uint64_t{1} << n; break;
      default:
        throw std::invalid_argument("invalid pauli character in \"" + text + "\"");
    }
  }
  if (n == 0) throw std::invalid_argument("empty pauli text");
  return PauliString(n, x, z, phase_exp);
}

PauliString PauliString::single(int n, int qubit, char c) {
  std::string text(static_cast<size_t>(n), 'I');
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("qubit out of range");
  text[static_cast<size_t>(qubit)] = c;
  return from_text(text);
}

PauliString PauliString::sample_uniform(int n, Philox& rng) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  uint64_t mask = n < 64 ? (uint64_t{1} << n) - 1 : ~uint64_t{0};
  uint64_t x = rng.next_u64() & mask;
  uint64_t z = rng.next_u64() & mask;
  return PauliString(n, x, z, 0);
}

Complex PauliString::phase() const {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_exp_];
}

int PauliString::weight() const {
  return std::popcount(x_ | z_);
}

std::vector<int> PauliString::support() const {
  std::vector<int> qs;
  uint64_t bits = x_ | z_;
  for (int q = 0; q < n_; ++q)
    if ((bits >> q) & 1) qs.push_back(q);
  return qs;
}

char PauliString::char_at(int qubit) const {
  static const char chars[4] = {'I', 'X', 'Y', 'Z'};
  return chars[label_of(x_, z_, qubit)];
}

bool PauliString::commutes_with(const PauliString& other) const {
  return commutation_sign(*this, other).value() == 1;
}

PauliString PauliString::embed(int n, const std::vector<int>& qubits,
                               const PauliString& local) {
  if (static_cast<int>(qubits.size()) != local.n())
    throw std::invalid_argument("embed: qubit list does not match local width");
  uint64_t x = 0, z = 0;
  for (int i = 0; i < local.n(); ++i) {
    int q = qubits[static_cast<size_t>(i)];
    if (q < 0 || q >= n) throw std::invalid_argument("embed: qubit out of range");
    x |= ((local.x_ >> i) & 1) << q;
    z |= ((local.z_ >> i) & 1) << q;
  }
  return PauliString(n, x, z, local.phase_exp_);
}

PauliString PauliString::restrict_to(const std::vector<int>& qubits) const {
  uint64_t x = 0, z = 0;
  for (size_t i = 0; i < qubits.size(); ++i) {
    int q = qubits[i];
    if (q < 0 || q >= n_) throw std::invalid_argument("restrict: qubit out of range");
    x |= ((x_ >> q) & 1) << i;
    z |= ((z_ >> q) & 1) << i;
  }
  return PauliString(static_cast<int>(qubits.size()), x, z, phase_exp_);
}

std::string PauliString::text() const {
  static const char* prefixes[4] = {"", "i", "-", "-i"};
  std::string out = prefixes[phase_exp_];
  for (int q = 0; q < n_; ++q) out.push_back(char_at(q));
  return out;
}

Matrix PauliString::to_matrix() const {
  // Qubit 0 is the leftmost (most significant) tensor factor.
  Matrix m = Matrix::Identity(1, 1);
  for (int q = 0; q < n_; ++q)
    m = kron(m, single_qubit_matrix(label_of(x_, z_, q)));
  return phase() * m;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n()) throw std::invalid_argument("pauli length mismatch");
  int phase_exp = a.phase_exp() + b.phase_exp();
  for (int q = 0; q < a.n(); ++q) {
    phase_exp += kProductPhase[label_of(a.x_bits(), a.z_bits(), q)]
                              [label_of(b.x_bits(), b.z_bits(), q)];
  }
  return PauliString(a.n(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
                     phase_exp);
}

SignFactor commutation_sign(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n()) throw std::invalid_argument("pauli length mismatch");
  int parity = (std::popcount(a.x_bits() & b.z_bits()) +
                std::popcount(a.z_bits() & b.x_bits())) & 1;
  return SignFactor(parity == 0 ? 1 : -1);
}

PauliString correlated_difference(const PauliString& v_j, const PauliString& v_k) {
  return multiply(v_k, v_j).with_phase_exp(0);
}

}  // namespace reas
