// Copyright 2026 The hamlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>

namespace hamlearn {

/// Counter-splittable random stream (xoshiro256** core, SplitMix64 seeding).
///
/// Every published number must be reproducible from a single 64-bit seed, so
/// all sampling in the library goes through this class; the C++ standard
/// distributions are implementation-defined and are not used. `fork` derives
/// an independent child stream from the parent's base seed and a tag, which
/// makes per-shot / per-candidate substreams stable under reordering.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : base_seed_(seed) {
    uint64_t x = seed;
    for (auto& word : state_) word = split_mix(x);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), n >= 1.
  uint64_t uniform_u64(uint64_t n) {
    // Rejection-free multiply-shift would bias for huge n; n here is small.
    uint64_t threshold = -n % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// +1 with probability (1 + mean) / 2, else -1.
  int pm_one(double mean) { return bernoulli(0.5 * (1.0 + mean)) ? 1 : -1; }

  RandomStream fork(uint64_t tag) const {
    uint64_t x = base_seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
    return RandomStream(split_mix(x));
  }

  RandomStream fork(std::string_view label) const { return fork(fnv1a(label)); }

  uint64_t base_seed() const { return base_seed_; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t split_mix(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return h;
  }

  uint64_t base_seed_;
  uint64_t state_[4];
};

}  // namespace hamlearn
