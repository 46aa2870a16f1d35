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

#include "reas/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace reas {

namespace {

// Enumerate the 2^(n-k) base indices with zeros at the target bit positions,
// then expand over target assignments.
struct TargetLayout {
  int n = 0;
  int k = 0;
  std::vector<uint64_t> target_bits;  // bit mask per target, local order
  uint64_t free_mask = 0;

  TargetLayout(int n_, const std::vector<int>& qubits) : n(n_) {
    k = static_cast<int>(qubits.size());
    uint64_t tmask = 0;
    for (int q : qubits) {
      if (q < 0 || q >= n) throw std::invalid_argument("target qubit out of range");
      uint64_t b = uint64_t{1} << bit_position(n, q);
      if (tmask & b) throw std::invalid_argument("duplicate target qubit");
      target_bits.push_back(b);
      tmask |= b;
    }
    free_mask = ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)) & ~tmask;
  }

  uint64_t expand(uint64_t base, int local) const {
    uint64_t idx = base;
    for (int t = 0; t < k; ++t)
      if ((local >> (k - 1 - t)) & 1) idx |= target_bits[static_cast<size_t>(t)];
    return idx;
  }
};

template <typename Body>
void for_each_base(uint64_t free_mask, int n, Body body) {
  // Iterate subsets of the free mask in increasing order.
  uint64_t base = 0;
  while (true) {
    body(base);
    if (base == free_mask) break;
    base = (base - free_mask) & free_mask;
  }
  (void)n;
}

void apply_matrix_vec(Complex* amps, int n, const std::vector<int>& qubits,
                      const Matrix& local) {
  TargetLayout layout(n, qubits);
  int dim = 1 << layout.k;
  if (local.rows() != dim || local.cols() != dim)
    throw std::invalid_argument("local matrix dimension mismatch");
  std::vector<Complex> scratch(static_cast<size_t>(dim));
  for_each_base(layout.free_mask, n, [&](uint64_t base) {
    for (int a = 0; a < dim; ++a) scratch[static_cast<size_t>(a)] = amps[layout.expand(base, a)];
    for (int a = 0; a < dim; ++a) {
      Complex acc = 0;
      for (int b = 0; b < dim; ++b) acc += local(a, b) * scratch[static_cast<size_t>(b)];
      amps[layout.expand(base, a)] = acc;
    }
  });
}

Matrix local_rotation_matrix(const PauliString& local_axis, double theta) {
  int dim = 1 << local_axis.n();
  Matrix p = local_axis.to_matrix();
  return std::cos(theta) * Matrix::Identity(dim, dim) -
         Complex(0, 1) * std::sin(theta) * p;
}

}  // namespace

void apply_local_matrix(Vector& state, int n, const std::vector<int>& qubits,
                        const Matrix& local) {
  if (state.size() != (int64_t{1} << n))
    throw std::invalid_argument("state size does not match qubit count");
  apply_matrix_vec(state.data(), n, qubits, local);
}

void apply_local_rotation(Vector& state, int n, const std::vector<int>& qubits,
                          const PauliString& local_axis, double theta) {
  apply_local_matrix(state, n, qubits, local_rotation_matrix(local_axis, theta));
}

void apply_pauli(Vector& state, const PauliString& p) {
  int n = p.n();
  if (state.size() != (int64_t{1} << n))
    throw std::invalid_argument("state size does not match qubit count");
  // Positioned masks in index space.
  uint64_t xmask = 0, zmask = 0;
  int n_y = 0;
  for (int q = 0; q < n; ++q) {
    char c = p.char_at(q);
    uint64_t b = uint64_t{1} << bit_position(n, q);
    if (c == 'X' || c == 'Y') xmask |= b;
    if (c == 'Z' || c == 'Y') zmask |= b;
    if (c == 'Y') ++n_y;
  }
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex front = p.phase() * ipow[n_y & 3];
  uint64_t size = uint64_t{1} << n;
  Vector out(state.size());
  for (uint64_t b = 0; b < size; ++b) {
    Complex f = front;
    if (std::popcount(b & zmask) & 1) f = -f;
    out(static_cast<int64_t>(b ^ xmask)) = f * state(static_cast<int64_t>(b));
  }
  state.swap(out);
}

void apply_local_matrix(Matrix& u, int n, const std::vector<int>& qubits,
                        const Matrix& local) {
  if (u.rows() != (int64_t{1} << n))
    throw std::invalid_argument("matrix size does not match qubit count");
  for (Eigen::Index c = 0; c < u.cols(); ++c)
    apply_matrix_vec(u.col(c).data(), n, qubits, local);
}

void apply_local_rotation(Matrix& u, int n, const std::vector<int>& qubits,
                          const PauliString& local_axis, double theta) {
  apply_local_matrix(u, n, qubits, local_rotation_matrix(local_axis, theta));
}

void apply_pauli(Matrix& u, const PauliString& p) {
  Vector col;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    col = u.col(c);
    apply_pauli(col, p);
    u.col(c) = col;
  }
}

void conjugate_pauli(Matrix& rho, const PauliString& p) {
  // (P rho P^dag)(i, j) = s_i s_j rho(i^x, j^x) with s_i = (-1)^|i & z|:
  // the phases of P cancel between the two sides, leaving signs only.
  int n = p.n();
  if (rho.rows() != (int64_t{1} << n))
    throw std::invalid_argument("density size does not match qubit count");
  uint64_t xmask = 0, zmask = 0;
  for (int q = 0; q < n; ++q) {
    char c = p.char_at(q);
    uint64_t b = uint64_t{1} << bit_position(n, q);
    if (c == 'X' || c == 'Y') xmask |= b;
    if (c == 'Z' || c == 'Y') zmask |= b;
  }
  uint64_t dim = uint64_t{1} << n;
  Matrix out(rho.rows(), rho.cols());
  for (uint64_t j = 0; j < dim; ++j) {
    double sj = (std::popcount(j & zmask) & 1) ? -1.0 : 1.0;
    for (uint64_t i = 0; i < dim; ++i) {
      double si = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
      out(static_cast<int64_t>(i ^ xmask), static_cast<int64_t>(j ^ xmask)) =
          si * sj * rho(static_cast<int64_t>(i), static_cast<int64_t>(j));
    }
  }
  rho.swap(out);
}

}  // namespace reas
