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

#ifndef REAS_DRESS_HPP
#define REAS_DRESS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reas/circuit.hpp"
#include "reas/pauli.hpp"
#include "reas/rng.hpp"

namespace reas {

// Flattened executable op. Rotations carry the sign factor from the
// enclosing twirl draw; insertions are the physical correlated Pauli gates.
struct PhysicalOp {
  enum class Kind { kRotation, kInsertion };
  Kind kind = Kind::kRotation;

  // Rotation fields. The executed rotation is exp(-i sign*theta axis).
  PauliString axis;          // system width, phase +1
  double theta_nominal = 0;  // canonical gate angle
  double theta = 0;          // after calibration corrections
  int sign = 1;
  bool drive_coupled = true;  // false for fixed Clifford wrappers
  std::string type_key;
  int base_ordinal = -1;  // gate index in the base circuit, -1 for insertions
  int block = -1;

  // Insertion fields reuse `axis` for the Pauli to apply; the leading and
  // trailing insertions are edges (not sandwiched by further draws).
  bool edge_insertion = false;
  static PhysicalOp insertion(PauliString p, int block_boundary,
                              bool edge = false);
  static PhysicalOp rotation(const RotationGate& g, int sign, int ordinal, int block);
};

// REAS-dressed circuit: the base circuit rewritten with sign-flipped
// rotations and the nested correlated random Pauli insertions
// sigma_{v_1}, sigma_{v_{2:1}}, ..., sigma_{v_B}.
struct DressedCircuit {
  LayeredCircuit base;
  std::vector<PauliString> draws;      // v_1 ... v_B, one per block
  std::vector<PauliString> inserted;   // B+1 physical inserted gates
  std::vector<int> signs;              // per computational gate, flat order
  std::map<std::string, double> corrections;  // type key -> delta theta
  std::vector<PhysicalOp> ops;         // executable sequence

  int n() const { return base.n; }
};

// Draws one uniform Pauli string per block and rewrites the circuit:
// leading sigma_{v_1}, per-block sign flips against sigma_{v_b}, correlated
// differences between blocks, trailing sigma_{v_B}. Noiselessly equal to the
// base circuit up to a global phase for every draw.
DressedCircuit dress(const LayeredCircuit& c, Philox& rng);

// The base circuit as an op list without any insertions (signs all +1);
// the "original" arm of every comparison.
DressedCircuit undressed(const LayeredCircuit& c);

// Applies per-gate-type angle corrections: theta -> theta - shift before the
// sign flip. Unknown gate types get zero shift; their keys are reported in
// *warnings when provided.
DressedCircuit apply_corrections(const DressedCircuit& d,
                                 const std::map<std::string, double>& shifts,
                                 std::vector<std::string>* warnings = nullptr);

// Partner qubit used by the single Pauli transformation: even qubits pair
// right, odd qubits pair left; the last qubit of an odd-width register pairs
// left.
int spt_partner(int qubit, int n);

// Rewrites one weight-1 rotation as the fixed-Clifford-wrapped two-qubit ZZ
// sequence; only the central ZZ rotation keeps the drive coupling. The
// noiseless product equals the original gate up to a global phase.
std::vector<RotationGate> single_pauli_transform(const RotationGate& g, int partner);

// Applies the single Pauli transformation to every weight-1 gate of the
// circuit. Each emitted layer becomes its own block; weight-2 gates pass
// through unchanged.
LayeredCircuit apply_spt(const LayeredCircuit& c);

// Text form: the circuit-ir format with the physical inserted gates tagged
// `ins <PauliText>` and rotations carrying their executed signed angles.
void write_dressed(std::ostream& out, const DressedCircuit& d);

}  // namespace reas

#endif  // REAS_DRESS_HPP
