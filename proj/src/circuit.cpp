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

#include "reas/circuit.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "reas/kernels.hpp"

namespace reas {

double canonical_angle(double theta, bool* changed) {
  double t = std::fmod(theta, M_PI);
  if (t < 0) t += M_PI;
  if (t >= M_PI) t -= M_PI;  // guards fmod edge cases
  if (changed) *changed = std::abs(t - theta) > 1e-15;
  return t;
}

RotationGate::RotationGate(PauliString axis, double theta, bool drive_coupled)
    : axis_(std::move(axis)), theta_(0), reduced_(false),
      drive_coupled_(drive_coupled) {
  if (axis_.phase_exp() == 1 || axis_.phase_exp() == 3)
    throw std::invalid_argument("rotation axis must be Hermitian (phase +-1)");
  if (axis_.phase_exp() == 2) {
    theta = -theta;
    axis_ = axis_.with_phase_exp(0);
    reduced_ = true;
  }
  int w = axis_.weight();
  if (w < 1 || w > 2)
    throw std::invalid_argument("rotation axis weight must be 1 or 2");
  bool changed = false;
  theta_ = canonical_angle(theta, &changed);
  reduced_ = reduced_ || changed;
  qubits_ = axis_.support();
}

std::string RotationGate::type_key() const {
  std::ostringstream os;
  os.precision(17);
  os << axis_.text() << "@" << theta_;
  return os.str();
}

int LayeredCircuit::total_layers() const {
  int count = 0;
  for (const auto& b : blocks) count += static_cast<int>(b.layers.size());
  return count;
}

int LayeredCircuit::total_gates() const {
  int count = 0;
  for (const auto& b : blocks)
    for (const auto& l : b.layers) count += static_cast<int>(l.gates.size());
  return count;
}

std::vector<std::string> validate(const LayeredCircuit& c, int max_layers_per_block) {
  std::vector<std::string> warnings;
  if (c.n < 1) throw std::invalid_argument("circuit must have at least one qubit");
  size_t block_index = 0;
  for (const auto& block : c.blocks) {
    if (block.layers.empty())
      throw std::invalid_argument("empty block at index " + std::to_string(block_index));
    if (static_cast<int>(block.layers.size()) > max_layers_per_block)
      throw std::invalid_argument("block exceeds layer cap at index " +
                                  std::to_string(block_index));
    for (const auto& layer : block.layers) {
      uint64_t used = 0;
      for (const auto& g : layer.gates) {
        if (g.axis().n() != c.n)
          throw std::invalid_argument("gate width does not match circuit width");
        for (int q : g.qubits()) {
          uint64_t bit = uint64_t{1} << q;
          if (used & bit)
            throw std::invalid_argument("overlapping gate supports within a layer");
          used |= bit;
        }
        if (g.angle_was_reduced())
          warnings.push_back("gate " + g.axis().text() +
                             " angle reduced to canonical domain [0, pi)");
      }
    }
    ++block_index;
  }
  return warnings;
}

Matrix ideal_unitary(const LayeredCircuit& c) {
  if (c.n > kUnitaryQubitCap)
    throw std::invalid_argument("circuit too wide for dense unitary construction");
  int64_t dim = int64_t{1} << c.n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& block : c.blocks)
    for (const auto& layer : block.layers)
      for (const auto& g : layer.gates)
        apply_local_rotation(u, c.n, g.qubits(), g.local_axis(), g.theta());
  return u;
}

LayeredCircuit build_trotter_ising(int n, int steps,
                                   const std::vector<double>& zz_angles,
                                   double x_angle) {
  if (n < 2) throw std::invalid_argument("need at least two sites");
  if (steps < 1) throw std::invalid_argument("need at least one step");
  if (static_cast<int>(zz_angles.size()) != n - 1)
    throw std::invalid_argument("expected n-1 bond angles");

  LayeredCircuit c;
  c.n = n;
  auto bond_layer = [&](int parity) {
    Layer layer;
    for (int i = parity; i < n - 1; i += 2) {
      PauliString axis = PauliString::embed(
          n, {i, i + 1}, PauliString::from_text("ZZ"));
      layer.gates.emplace_back(axis, zz_angles[static_cast<size_t>(i)]);
    }
    return layer;
  };
  for (int s = 0; s < steps; ++s) {
    for (int parity : {0, 1}) {
      Layer layer = bond_layer(parity);
      if (!layer.gates.empty()) c.append_block(Block{{std::move(layer)}});
    }
    Layer rx;
    for (int q = 0; q < n; ++q)
      rx.gates.emplace_back(PauliString::single(n, q, 'X'), x_angle);
    c.append_block(Block{{std::move(rx)}});
  }
  return c;
}

LayeredCircuit compute_uncompute(const LayeredCircuit& c) {
  LayeredCircuit out = c;
  for (auto it = c.blocks.rbegin(); it != c.blocks.rend(); ++it) {
    Block rev;
    for (auto lit = it->layers.rbegin(); lit != it->layers.rend(); ++lit) {
      Layer layer;
      for (const auto& g : lit->gates)
        layer.gates.emplace_back(g.axis(), -g.theta());
      rev.layers.push_back(std::move(layer));
    }
    out.blocks.push_back(std::move(rev));
  }
  return out;
}

LayeredCircuit reblock(const LayeredCircuit& c, int layers_per_block) {
  if (layers_per_block < 1) throw std::invalid_argument("need at least one layer per block");
  LayeredCircuit out;
  out.n = c.n;
  Block current;
  for (const auto& block : c.blocks) {
    for (const auto& layer : block.layers) {
      current.layers.push_back(layer);
      if (static_cast<int>(current.layers.size()) == layers_per_block) {
        out.blocks.push_back(std::move(current));
        current = Block{};
      }
    }
  }
  if (!current.layers.empty()) out.blocks.push_back(std::move(current));
  return out;
}

LayeredCircuit read_circuit(std::istream& in) {
  LayeredCircuit c;
  std::string line;
  int declared_n = -1;
  Block* block = nullptr;
  Layer* layer = nullptr;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    if (word == "qubits") {
      if (!(ls >> declared_n)) fail("expected qubit count");
      c.n = declared_n;
    } else if (word == "block") {
      c.blocks.emplace_back();
      block = &c.blocks.back();
      layer = nullptr;
    } else if (word == "layer") {
      if (!block) fail("layer before any block");
      block->layers.emplace_back();
      layer = &block->layers.back();
    } else if (word == "gate" || word == "ins") {
      if (word == "gate" && !layer) fail("gate before any layer");
      std::string pauli_text;
      if (!(ls >> pauli_text)) fail("expected pauli text");
      if (word == "ins") continue;  // insertions are regenerated, not replayed
      std::vector<int> qubits;
      std::vector<std::string> rest;
      std::string tok;
      while (ls >> tok) rest.push_back(tok);
      if (rest.empty()) fail("expected qubits and angle");
      double theta = std::stod(rest.back());
      for (size_t i = 0; i + 1 < rest.size(); ++i) qubits.push_back(std::stoi(rest[i]));
      if (declared_n < 0) fail("qubits line must precede gates");
      PauliString local = PauliString::from_text(pauli_text);
      PauliString axis = PauliString::embed(declared_n, qubits, local);
      layer->gates.emplace_back(axis, theta);
    } else {
      fail("unknown directive \"" + word + "\"");
    }
  }
  return c;
}

void write_circuit(std::ostream& out, const LayeredCircuit& c) {
  out << "qubits " << c.n << "\n";
  for (const auto& block : c.blocks) {
    out << "block\n";
    for (const auto& layer : block.layers) {
      out << "layer\n";
      for (const auto& g : layer.gates) {
        out << "gate " << g.local_axis().text();
        for (int q : g.qubits()) out << " " << q;
        std::ostringstream num;
        num.precision(17);
        num << g.theta();
        out << " " << num.str() << "\n";
      }
    }
  }
}

}  // namespace reas
