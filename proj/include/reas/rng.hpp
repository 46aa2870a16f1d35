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

#ifndef REAS_RNG_HPP
#define REAS_RNG_HPP

#include <array>
#include <cstdint>
#include <initializer_list>

namespace reas {

// Philox4x32-10 counter-based generator. Streams are cheap to derive and
// never share state, so every shot / sample / gate draw can get its own
// stream keyed by (master seed, derived stream id). Replaying a stream id
// reproduces the same sequence regardless of thread scheduling.
class Philox {
public:
  using Block = std::array<uint32_t, 4>;

  Philox() : Philox(0, 0) {}
  Philox(uint64_t seed, uint64_t stream) {
    key_[0] = static_cast<uint32_t>(seed);
    key_[1] = static_cast<uint32_t>(seed >> 32);
    stream_lo_ = static_cast<uint32_t>(stream);
    stream_hi_ = static_cast<uint32_t>(stream >> 32);
  }

  // Raw 128-bit block for counter value `ctr`.
  static Block round10(Block ctr, std::array<uint32_t, 2> key);

  uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  uint64_t next_u64() {
    uint64_t lo = next_u32();
    uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n).
  uint64_t uniform_int(uint64_t n);

  // Standard normal via Box-Muller; caches the second deviate.
  double normal();

  bool bernoulli(double p) { return uniform() < p; }

  // Binomial sample by inversion for small n, normal approximation never
  // used: n here stays within shot counts where the CDF walk is fine.
  uint64_t binomial(uint64_t n, double p);

private:
  void refill();

  std::array<uint32_t, 2> key_{};
  uint32_t stream_lo_ = 0, stream_hi_ = 0;
  uint64_t counter_ = 0;
  Block buf_{};
  int pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// FNV-1a over a list of ids, used to derive independent stream ids from
// structured coordinates such as (scenario, sample, gate).
uint64_t derive_stream(std::initializer_list<uint64_t> ids);

inline Philox make_stream(uint64_t seed, std::initializer_list<uint64_t> ids) {
  return Philox(seed, derive_stream(ids));
}

}  // namespace reas

#endif  // REAS_RNG_HPP
