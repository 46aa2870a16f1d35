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

#ifndef REAS_KERNELS_HPP
#define REAS_KERNELS_HPP

#include <vector>

#include "reas/dense.hpp"
#include "reas/pauli.hpp"

// Local gate application by strided iteration. Index convention: qubit q of
// an n-qubit register occupies bit (n-1-q) of the amplitude index, so qubit 0
// is the most significant bit, matching the tensor order of
// PauliString::to_matrix.

namespace reas {

inline int bit_position(int n, int qubit) { return n - 1 - qubit; }

// Applies a 2^k x 2^k matrix to the listed target qubits of an n-qubit state.
void apply_local_matrix(Vector& state, int n, const std::vector<int>& qubits,
                        const Matrix& local);

// Applies exp(-i * theta * P) where P acts on `qubits` (P given in local
// width-k form with phase +1).
void apply_local_rotation(Vector& state, int n, const std::vector<int>& qubits,
                          const PauliString& local_axis, double theta);

// In-place action of a full-width Pauli string (phase included).
void apply_pauli(Vector& state, const PauliString& p);

// Same operations column-by-column on a 2^n x 2^n matrix, used to build
// circuit unitaries without forming Kronecker products.
void apply_local_matrix(Matrix& u, int n, const std::vector<int>& qubits,
                        const Matrix& local);
void apply_local_rotation(Matrix& u, int n, const std::vector<int>& qubits,
                          const PauliString& local_axis, double theta);
void apply_pauli(Matrix& u, const PauliString& p);

// Conjugation rho -> P rho P^dag for density matrices.
void conjugate_pauli(Matrix& rho, const PauliString& p);

}  // namespace reas

#endif  // REAS_KERNELS_HPP
