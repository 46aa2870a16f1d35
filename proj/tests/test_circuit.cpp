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

#include "doctest.h"
#include "reas/circuit.hpp"
#include "reas/dense.hpp"
#include "reas/sim.hpp"

#include <sstream>

using namespace reas;

namespace {

PauliString P(const std::string& s) { return PauliString::from_text(s); }

RotationGate G(const std::string& axis, double theta) {
  return RotationGate(P(axis), theta);
}

LayeredCircuit single_layer_blocks(int n, const std::vector<RotationGate>& gates) {
  LayeredCircuit c;
  c.n = n;
  for (const auto& g : gates) c.append_block(Block{{Layer{{g}}}});
  return c;
}

LayeredCircuit random_circuit(int n, int layers, Philox& rng) {
  LayeredCircuit c;
  c.n = n;
  const double angle_choices[] = {M_PI / 2, M_PI / 4, M_PI / 8, 3 * M_PI / 4,
                                  7 * M_PI / 8, 0.3};
  for (int l = 0; l < layers; ++l) {
    int q0 = static_cast<int>(rng.uniform_int(static_cast<uint64_t>(n)));
    bool two = n >= 2 && rng.bernoulli(0.6);
    PauliString axis;
    if (two) {
      int q1 = (q0 + 1 + static_cast<int>(rng.uniform_int(
                              static_cast<uint64_t>(n - 1)))) % n;
      char a = "XYZ"[rng.uniform_int(3)];
      char b = "XYZ"[rng.uniform_int(3)];
      std::string text(static_cast<size_t>(n), 'I');
      text[static_cast<size_t>(q0)] = a;
      text[static_cast<size_t>(q1)] = b;
      axis = P(text);
    } else {
      axis = PauliString::single(n, q0, "XYZ"[rng.uniform_int(3)]);
    }
    double theta = angle_choices[rng.uniform_int(6)];
    c.append_block(Block{{Layer{{RotationGate(axis, theta)}}}});
  }
  return c;
}

}  // namespace

TEST_CASE("angle canonicalization") {
  bool changed = false;
  CHECK(canonical_angle(3 * M_PI / 2, &changed) == doctest::Approx(M_PI / 2));
  CHECK(changed);
  CHECK(canonical_angle(-M_PI / 8, &changed) == doctest::Approx(7 * M_PI / 8));
  CHECK(changed);
  CHECK(canonical_angle(0.3, &changed) == doctest::Approx(0.3));
  CHECK(!changed);

  RotationGate g(P("ZZ"), 3 * M_PI / 2);
  CHECK(g.theta() == doctest::Approx(M_PI / 2));
  CHECK(g.angle_was_reduced());

  // A -1 axis phase folds into the angle.
  RotationGate h(P("-Z"), M_PI / 8);
  CHECK(h.axis() == P("Z"));
  CHECK(h.theta() == doctest::Approx(7 * M_PI / 8));
  CHECK_THROWS(RotationGate(P("iZ"), 0.1));
  CHECK_THROWS(RotationGate(P("ZZZ"), 0.1));  // weight 3
}

TEST_CASE("validate catches overlaps and empty blocks") {
  LayeredCircuit c;
  c.n = 3;
  Layer bad;
  bad.gates.push_back(G("ZZI", 0.1));
  bad.gates.push_back(G("IXZ", 0.2));  // overlaps qubit 1
  c.append_block(Block{{bad}});
  CHECK_THROWS(validate(c));

  LayeredCircuit ok;
  ok.n = 3;
  ok.append_block(Block{{Layer{{G("ZZI", 0.1)}}}});
  CHECK(validate(ok).empty());

  LayeredCircuit empty_block;
  empty_block.n = 2;
  empty_block.blocks.push_back(Block{});
  CHECK_THROWS(validate(empty_block));

  LayeredCircuit warned;
  warned.n = 1;
  warned.append_block(Block{{Layer{{G("Z", 3 * M_PI / 2)}}}});
  CHECK(validate(warned).size() == 1);
}

TEST_CASE("ideal unitary basics") {
  LayeredCircuit empty;
  empty.n = 2;
  CHECK((ideal_unitary(empty) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);

  // Single Z rotation is the diagonal phase pair.
  LayeredCircuit zc = single_layer_blocks(1, {G("Z", M_PI / 4)});
  Matrix u = ideal_unitary(zc);
  CHECK(std::abs(u(0, 0) - std::exp(Complex(0, -M_PI / 4))) < 1e-12);
  CHECK(std::abs(u(1, 1) - std::exp(Complex(0, M_PI / 4))) < 1e-12);
  CHECK(std::abs(u(0, 1)) < 1e-15);

  // Two-layer product against the Hermitian-exponential oracle.
  LayeredCircuit two =
      single_layer_blocks(2, {G("ZZ", M_PI / 8), G("YZ", 7 * M_PI / 8)});
  Matrix expect = hermitian_rotation(P("YZ").to_matrix(), 7 * M_PI / 8) *
                  hermitian_rotation(P("ZZ").to_matrix(), M_PI / 8);
  CHECK((ideal_unitary(two) - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ideal unitary is unitary for random circuits") {
  Philox rng(31, 0);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_int(4));
    LayeredCircuit c = random_circuit(n, 12, rng);
    CHECK(is_unitary(ideal_unitary(c), 1e-12));
  }
}

TEST_CASE("reblocking leaves the unitary invariant") {
  Philox rng(32, 0);
  LayeredCircuit c = random_circuit(3, 10, rng);
  Matrix u = ideal_unitary(c);
  for (int lpb : {2, 3, 5}) {
    LayeredCircuit r = reblock(c, lpb);
    CHECK((ideal_unitary(r) - u).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("trotter generator structure") {
  std::vector<double> zz = {0.3};
  LayeredCircuit c = build_trotter_ising(2, 1, zz, 0.1 * M_PI);
  CHECK(c.total_gates() == 3);  // one ZZ + two Rx
  CHECK(c.blocks.size() == 2);  // one bond layer (odd empty), one Rx layer

  std::vector<double> zz6(5, 0.2);
  LayeredCircuit c6 = build_trotter_ising(6, 2, zz6, 0.1 * M_PI);
  // Per step: even bonds {0-1, 2-3, 4-5}, odd bonds {1-2, 3-4}, Rx on all.
  CHECK(c6.total_gates() == 2 * (5 + 6));
  CHECK(c6.blocks.size() == 6);
  const auto& even_layer = c6.blocks[0].layers[0];
  CHECK(even_layer.gates.size() == 3);
  CHECK(even_layer.gates[0].qubits() == std::vector<int>{0, 1});
  const auto& odd_layer = c6.blocks[1].layers[0];
  CHECK(odd_layer.gates.size() == 2);
  CHECK(odd_layer.gates[0].qubits() == std::vector<int>{1, 2});

  // Gate count formula for several sizes.
  Philox rng(5, 5);
  for (int n : {3, 5, 8}) {
    std::vector<double> angles(static_cast<size_t>(n - 1));
    for (auto& a : angles) a = rng.uniform(0.1, 0.9) * M_PI / 2;
    for (int steps : {1, 2, 4}) {
      LayeredCircuit t = build_trotter_ising(n, steps, angles, 0.1 * M_PI);
      CHECK(t.total_gates() == steps * ((n - 1) + n));
    }
  }
  CHECK_THROWS(build_trotter_ising(4, 1, {0.1}, 0.1));
}

TEST_CASE("compute-uncompute inverts the circuit") {
  Philox rng(33, 1);
  LayeredCircuit c = random_circuit(3, 8, rng);
  LayeredCircuit cu = compute_uncompute(c);
  Matrix u = ideal_unitary(cu);
  CHECK(operator_distance_up_to_phase(u, Matrix::Identity(8, 8)) < 1e-10);

  // Single gate: ZZ(pi/8) followed by the canonicalized negation.
  LayeredCircuit one = single_layer_blocks(2, {G("ZZ", M_PI / 8)});
  LayeredCircuit oneu = compute_uncompute(one);
  CHECK(oneu.total_gates() == 2);
  CHECK(oneu.blocks[1].layers[0].gates[0].theta() ==
        doctest::Approx(7 * M_PI / 8));

  // Trotter compute-uncompute returns |0...0> exactly: <Z_q> = 1.
  std::vector<double> zz(3, 0.4);
  LayeredCircuit tc = compute_uncompute(build_trotter_ising(4, 3, zz, 0.1 * M_PI));
  StateVector out = run_ideal(tc, StateVector::zero_state(4, 0));
  for (int q = 0; q < 4; ++q)
    CHECK(expectation(out, PauliString::single(4, q, 'Z')) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("circuit text round trip") {
  Philox rng(34, 2);
  LayeredCircuit c = random_circuit(4, 6, rng);
  std::stringstream ss;
  write_circuit(ss, c);
  LayeredCircuit back = read_circuit(ss);
  CHECK(back.n == c.n);
  CHECK(back.total_gates() == c.total_gates());
  CHECK((ideal_unitary(back) - ideal_unitary(c)).cwiseAbs().maxCoeff() < 1e-12);
}
