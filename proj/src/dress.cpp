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

#include "reas/dress.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace reas {

PhysicalOp PhysicalOp::insertion(PauliString p, int block_boundary,
                                 bool edge) {
  PhysicalOp op;
  op.kind = Kind::kInsertion;
  op.axis = std::move(p);
  op.block = block_boundary;
  op.edge_insertion = edge;
  return op;
}

PhysicalOp PhysicalOp::rotation(const RotationGate& g, int sign, int ordinal,
                                int block) {
  PhysicalOp op;
  op.kind = Kind::kRotation;
  op.axis = g.axis();
  op.theta_nominal = g.theta();
  op.theta = g.theta();
  op.sign = sign;
  op.drive_coupled = g.drive_coupled();
  op.type_key = g.type_key();
  op.base_ordinal = ordinal;
  op.block = block;
  return op;
}

namespace {

void append_block_ops(DressedCircuit& d, const Block& block, int block_index,
                      const PauliString* twirl, int* ordinal) {
  for (const auto& layer : block.layers) {
    for (const auto& g : layer.gates) {
      int sign = 1;
      if (twirl) sign = commutation_sign(g.axis(), *twirl).value();
      d.signs.push_back(sign);
      d.ops.push_back(PhysicalOp::rotation(g, sign, *ordinal, block_index));
      ++*ordinal;
    }
  }
}

}  // namespace

DressedCircuit dress(const LayeredCircuit& c, Philox& rng) {
  DressedCircuit d;
  d.base = c;
  int num_blocks = static_cast<int>(c.blocks.size());
  d.draws.reserve(static_cast<size_t>(num_blocks));
  for (int b = 0; b < num_blocks; ++b)
    d.draws.push_back(PauliString::sample_uniform(c.n, rng));

  int ordinal = 0;
  for (int b = 0; b < num_blocks; ++b) {
    if (b == 0) {
      d.inserted.push_back(d.draws[0]);
      d.ops.push_back(PhysicalOp::insertion(d.draws[0], 0, /*edge=*/true));
    } else {
      // Physical gate between blocks b-1 and b: sigma_{v_{b+1:b}} in 1-based
      // labels, i.e. the correlated difference of consecutive draws.
      PauliString ins = correlated_difference(d.draws[static_cast<size_t>(b)],
                                              d.draws[static_cast<size_t>(b - 1)]);
      d.inserted.push_back(ins);
      d.ops.push_back(PhysicalOp::insertion(ins, b));
    }
    append_block_ops(d, c.blocks[static_cast<size_t>(b)], b,
                     &d.draws[static_cast<size_t>(b)], &ordinal);
  }
  if (num_blocks > 0) {
    d.inserted.push_back(d.draws.back());
    d.ops.push_back(
        PhysicalOp::insertion(d.draws.back(), num_blocks, /*edge=*/true));
  }
  return d;
}

DressedCircuit undressed(const LayeredCircuit& c) {
  DressedCircuit d;
  d.base = c;
  int ordinal = 0;
  for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
    append_block_ops(d, c.blocks[static_cast<size_t>(b)], b, nullptr, &ordinal);
  return d;
}

DressedCircuit apply_corrections(const DressedCircuit& d,
                                 const std::map<std::string, double>& shifts,
                                 std::vector<std::string>* warnings) {
  DressedCircuit out = d;
  out.corrections = shifts;
  for (auto& op : out.ops) {
    if (op.kind != PhysicalOp::Kind::kRotation) continue;
    auto it = shifts.find(op.type_key);
    if (it == shifts.end()) {
      if (warnings)
        warnings->push_back("no correction for gate type " + op.type_key +
                            "; using zero shift");
      continue;
    }
    op.theta = op.theta_nominal - it->second;
  }
  return out;
}

int spt_partner(int qubit, int n) {
  if (n < 2) throw std::invalid_argument("partner assignment needs two qubits");
  int p = (qubit % 2 == 0) ? qubit + 1 : qubit - 1;
  if (p >= n) p = qubit - 1;
  return p;
}

std::vector<RotationGate> single_pauli_transform(const RotationGate& g, int partner) {
  if (g.axis().weight() != 1)
    throw std::invalid_argument("single pauli transform applies to weight-1 gates");
  int q = g.qubits().front();
  if (partner == q) throw std::invalid_argument("partner must differ from the target");
  int n = g.axis().n();
  if (partner < 0 || partner >= n)
    throw std::invalid_argument("partner out of range");

  auto on_pair = [&](const char* pattern) {
    return PauliString::embed(n, {q, partner}, PauliString::from_text(pattern));
  };
  auto wrapper = [&](const PauliString& axis, double theta) {
    return RotationGate(axis, theta, /*drive_coupled=*/false);
  };
  const double kQuarter = M_PI / 4;
  const double kQuarterInv = 3 * M_PI / 4;  // exp(+i pi/4 P) up to global phase

  char axis_char = g.axis().char_at(q);
  RotationGate central(on_pair("ZZ"), g.theta());
  std::vector<RotationGate> seq;
  switch (axis_char) {
    case 'Y':
      seq = {wrapper(on_pair("XZ"), kQuarter), central,
             wrapper(on_pair("XZ"), kQuarterInv)};
      break;
    case 'X':
      seq = {wrapper(on_pair("Z" /*on q*/ "I"), kQuarter),
             wrapper(on_pair("XZ"), kQuarter), central,
             wrapper(on_pair("XZ"), kQuarterInv),
             wrapper(on_pair("ZI"), kQuarterInv)};
      break;
    case 'Z':
      seq = {wrapper(on_pair("XI"), kQuarterInv),
             wrapper(on_pair("XZ"), kQuarter), central,
             wrapper(on_pair("XZ"), kQuarterInv),
             wrapper(on_pair("XI"), kQuarter)};
      break;
    default:
      throw std::invalid_argument("unsupported axis");
  }
  return seq;
}

LayeredCircuit apply_spt(const LayeredCircuit& c) {
  LayeredCircuit out;
  out.n = c.n;
  for (const auto& block : c.blocks) {
    for (const auto& layer : block.layers) {
      Layer passthrough;
      std::vector<const RotationGate*> singles;
      for (const auto& g : layer.gates) {
        if (g.axis().weight() == 1)
          singles.push_back(&g);
        else
          passthrough.gates.push_back(g);
      }
      if (!passthrough.gates.empty())
        out.append_block(Block{{std::move(passthrough)}});
      // Each transformed gate gets fresh single-gate layers so the partner
      // qubit never collides with other gates of the original layer.
      for (const RotationGate* g : singles) {
        int partner = spt_partner(g->qubits().front(), c.n);
        for (auto& sg : single_pauli_transform(*g, partner))
          out.append_block(Block{{Layer{{std::move(sg)}}}});
      }
    }
  }
  return out;
}

void write_dressed(std::ostream& out, const DressedCircuit& d) {
  out << "qubits " << d.base.n << "\n";
  int current_block = -1;
  for (const auto& op : d.ops) {
    if (op.kind == PhysicalOp::Kind::kInsertion) {
      out << "ins " << op.axis.text() << "\n";
      continue;
    }
    if (op.block != current_block) {
      out << "block\n";
      current_block = op.block;
    }
    out << "layer\n";
    std::ostringstream num;
    num.precision(17);
    num << op.sign * op.theta;
    out << "gate " << op.axis.restrict_to(op.axis.support()).text();
    for (int q : op.axis.support()) out << " " << q;
    out << " " << num.str() << "\n";
  }
}

}  // namespace reas
