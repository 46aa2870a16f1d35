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

#ifndef REAS_RC_HPP
#define REAS_RC_HPP

#include <cstdint>
#include <vector>

#include "reas/dense.hpp"
#include "reas/rng.hpp"

// Head-to-head single-qubit baseline: an alternating S/T phase-gate chain
// (depth L means L hard T gates between L+1 easy S gates) compiled either
// with standard randomized twirl corrections or with the correlated
// sign-flip dressing. The only noisy elementary gate is Z, which picks up
// the factor exp(i atan(eps) Z): noisy U = U [I + i eps Z + O(eps^2)].

namespace reas {

struct RcCircuit {
  int depth = 0;            // L
  std::vector<int> twirls;  // L values in {0=I, 1=X, 2=Y, 3=Z}
};

RcCircuit rc_compile(int depth, Philox& rng);

// Noisy product for one compiled draw. The first twirl is a standalone
// elementary Pauli; interior twirl corrections merge with the adjacent easy
// gate into a single elementary gate that is noisy only when it equals Z up
// to phase.
Matrix rc_unitary(const RcCircuit& c, double epsilon);

// exp(-i pi/4 Z)^{L+1} exp(-i pi/8 Z)^L, the ideal chain.
Matrix st_ideal_unitary(int depth);

// Closed form for the first-order coefficient of the averaged RC channel:
// the epsilon-linear part is c(L) * S^{L+1} T^L Z with c(L) = 1/4 - (L-1)/8.
double rc_closed_form_coefficient(int depth);
Matrix rc_first_order_operator(int depth);

struct StDressedDraw {
  int depth = 0;           // L
  std::vector<int> draws;  // 2L+1 values in {0..3}
};

StDressedDraw st_dressed_draw(int depth, Philox& rng);

// Noisy and noiseless products for one dressed draw (noiseless differs from
// the ideal chain by a global phase).
void st_dressed_unitaries(const StDressedDraw& d, double epsilon, Matrix* noisy,
                          Matrix* clean);

// Im tr(Z E_j[U_j(0)^dag U_j(eps)]) / (2 eps): the epsilon-linear error
// coefficient of the draw-averaged channel. Exhaustive when the draw count
// is at most 4^8, Monte-Carlo with mc_draws samples otherwise.
struct LinearCoefficient {
  double value = 0;
  double richardson_gap = 0;  // |c(eps_a) - c(eps_b)|, convergence check
  bool exhaustive = false;
  int64_t draws = 0;
};

LinearCoefficient rc_linear_coefficient(int depth, double eps_a, double eps_b,
                                        uint64_t seed, int mc_draws);
LinearCoefficient st_dressed_linear_coefficient(int depth, double eps_a,
                                                double eps_b, uint64_t seed,
                                                int mc_draws);

// RMS (over draws) of the trace distance between the ideal and noisy output
// states for the |+> input.
double rc_rms_trace_distance(int depth, double epsilon, int draws, uint64_t seed);
double st_dressed_rms_trace_distance(int depth, double epsilon, int draws,
                                     uint64_t seed);

}  // namespace reas

#endif  // REAS_RC_HPP
