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

#include "reas/rng.hpp"

#include <cmath>

namespace reas {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

}  // namespace

Philox::Block Philox::round10(Block ctr, std::array<uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = Block{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

void Philox::refill() {
  Block ctr{static_cast<uint32_t>(counter_),
            static_cast<uint32_t>(counter_ >> 32), stream_lo_, stream_hi_};
  buf_ = round10(ctr, key_);
  ++counter_;
  pos_ = 0;
}

uint64_t Philox::uniform_int(uint64_t n) {
  if (n <= 1) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Philox::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1, u2;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

uint64_t Philox::binomial(uint64_t n, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);
  if (n <= 4096) {
    uint64_t k = 0;
    for (uint64_t i = 0; i < n; ++i) k += bernoulli(p);
    return k;
  }
  double np = static_cast<double>(n) * p;
  if (np < 2000.0) {
    // Geometric skips between successes; exact and O(np) expected.
    double log1mp = std::log1p(-p);
    uint64_t k = 0;
    double pos = 0;
    while (true) {
      double u;
      do {
        u = uniform();
      } while (u <= 0.0);
      pos += std::floor(std::log(u) / log1mp) + 1.0;
      if (pos > static_cast<double>(n)) break;
      ++k;
    }
    return k;
  }
  // Gaussian approximation; indistinguishable at the variances used here.
  double sd = std::sqrt(np * (1.0 - p));
  double x = std::round(np + sd * normal());
  if (x < 0) x = 0;
  if (x > static_cast<double>(n)) x = static_cast<double>(n);
  return static_cast<uint64_t>(x);
}

uint64_t derive_stream(std::initializer_list<uint64_t> ids) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (uint64_t id : ids) {
    for (int i = 0; i < 8; ++i) {
      h ^= (id >> (8 * i)) & 0xFFull;
      h *= 0x100000001B3ull;
    }
  }
  return h;
}

}  // namespace reas
