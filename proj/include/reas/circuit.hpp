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

#ifndef REAS_CIRCUIT_HPP
#define REAS_CIRCUIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "reas/pauli.hpp"

namespace reas {

// Largest register for which full unitaries are constructed directly.
constexpr int kUnitaryQubitCap = 10;

// Reduces an angle to the canonical domain [0, pi) (rotations by pi are a
// global phase). Returns the canonical value; *changed reports whether the
// input was outside the domain.
double canonical_angle(double theta, bool* changed = nullptr);

// A Pauli rotation exp(-i axis theta) with weight-1 or weight-2 axis.
class RotationGate {
public:
  // Axis phase must be +1 or -1; a -1 phase is folded into the angle. The
  // angle is canonicalized to [0, pi). `drive_coupled` is false only for
  // fixed Clifford wrappers, whose errors do not follow the rotation sign.
  RotationGate(PauliString axis, double theta, bool drive_coupled = true);

  const PauliString& axis() const { return axis_; }
  double theta() const { return theta_; }
  const std::vector<int>& qubits() const { return qubits_; }
  bool angle_was_reduced() const { return reduced_; }
  bool drive_coupled() const { return drive_coupled_; }

  // Local form of the axis on its support, ascending qubit order.
  PauliString local_axis() const { return axis_.restrict_to(qubits_); }

  // Key identifying the gate type (axis pattern, nominal angle).
  std::string type_key() const;

  bool operator==(const RotationGate& o) const {
    return axis_ == o.axis_ && theta_ == o.theta_;
  }

private:
  PauliString axis_;
  double theta_;
  std::vector<int> qubits_;
  bool reduced_;
  bool drive_coupled_;
};

struct Layer {
  std::vector<RotationGate> gates;
};

struct Block {
  std::vector<Layer> layers;
};

struct LayeredCircuit {
  int n = 0;
  std::vector<Block> blocks;

  int total_layers() const;
  int total_gates() const;
  LayeredCircuit& append_block(Block b) {
    blocks.push_back(std::move(b));
    return *this;
  }
};

// Throws std::invalid_argument on structural violations (overlapping
// supports within a layer, empty blocks, width mismatches); returns
// warnings (e.g. angles that were reduced at construction).
std::vector<std::string> validate(const LayeredCircuit& c,
                                  int max_layers_per_block = 64);

// Product of all gate unitaries in circuit order (earliest block applied
// first). Requires n <= kUnitaryQubitCap.
Matrix ideal_unitary(const LayeredCircuit& c);

// Transverse-field Ising Trotter circuit: per step, ZZ(theta_i) on even
// bonds, ZZ on odd bonds, then Rx(x_angle) on every site. One layer per
// block.
LayeredCircuit build_trotter_ising(int n, int steps,
                                   const std::vector<double>& zz_angles,
                                   double x_angle);

// Returns c followed by its inverse (reversed order, angles negated then
// canonicalized); the composition is the identity up to a global phase.
LayeredCircuit compute_uncompute(const LayeredCircuit& c);

// Regroups layers into blocks of `layers_per_block` without reordering.
LayeredCircuit reblock(const LayeredCircuit& c, int layers_per_block);

// Line-oriented text format:
//   block
//   layer
//   gate <PauliText> <q0> [<q1>] <theta_radians>
LayeredCircuit read_circuit(std::istream& in);
void write_circuit(std::ostream& out, const LayeredCircuit& c);

}  // namespace reas

#endif  // REAS_CIRCUIT_HPP
