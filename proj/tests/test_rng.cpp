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
#include "reas/rng.hpp"

#include <cmath>
#include <set>

using namespace reas;

TEST_CASE("philox known-answer vectors") {
  // Published Philox4x32-10 test vectors.
  auto zero = Philox::round10({0, 0, 0, 0}, {0, 0});
  CHECK(zero[0] == 0x6627e8d5u);
  CHECK(zero[1] == 0xe169c58du);
  CHECK(zero[2] == 0xbc57ac4cu);
  CHECK(zero[3] == 0x9b00dbd8u);

  auto ones = Philox::round10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                              {0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);

  auto pi = Philox::round10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                            {0xa4093822u, 0x299f31d0u});
  CHECK(pi[0] == 0xd16cfe09u);
  CHECK(pi[1] == 0x94fdccebu);
  CHECK(pi[2] == 0x5001e420u);
  CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("streams replay deterministically") {
  Philox a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  Philox c(42, 8);
  bool any_diff = false;
  Philox a2(42, 7);
  for (int i = 0; i < 16; ++i) any_diff |= (a2.next_u64() != c.next_u64());
  CHECK(any_diff);
}

TEST_CASE("uniform and normal basic statistics") {
  Philox rng(123, 0);
  double sum = 0, sumsq = 0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  double mean = sum / N;
  double var = sumsq / N - mean * mean;
  CHECK(std::abs(mean - 0.5) < 0.005);
  CHECK(std::abs(var - 1.0 / 12.0) < 0.005);

  double nsum = 0, nsumsq = 0;
  for (int i = 0; i < N; ++i) {
    double x = rng.normal();
    nsum += x;
    nsumsq += x * x;
  }
  CHECK(std::abs(nsum / N) < 0.01);
  CHECK(std::abs(nsumsq / N - 1.0) < 0.02);
}

TEST_CASE("uniform_int is unbiased over small ranges") {
  Philox rng(9, 1);
  std::array<int, 5> counts{};
  const int N = 100000;
  for (int i = 0; i < N; ++i) counts[rng.uniform_int(5)]++;
  for (int c : counts) CHECK(std::abs(c - N / 5) < 800);
}

TEST_CASE("binomial matches moments") {
  Philox rng(77, 3);
  const int trials = 20000;
  double sum = 0;
  for (int i = 0; i < trials; ++i) sum += static_cast<double>(rng.binomial(400, 0.3));
  double mean = sum / trials;
  CHECK(std::abs(mean - 120.0) < 1.0);

  double big = 0;
  for (int i = 0; i < 2000; ++i) big += static_cast<double>(rng.binomial(100000, 0.25));
  CHECK(std::abs(big / 2000 - 25000.0) < 50.0);
}

TEST_CASE("derive_stream separates coordinates") {
  std::set<uint64_t> ids;
  for (uint64_t a = 0; a < 20; ++a)
    for (uint64_t b = 0; b < 20; ++b) ids.insert(derive_stream({a, b}));
  CHECK(ids.size() == 400);
  CHECK(derive_stream({1, 2}) != derive_stream({2, 1}));
}
