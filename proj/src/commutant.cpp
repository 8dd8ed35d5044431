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

#include "hamlearn/commutant.hpp"

namespace hamlearn {

CommutantSampler::CommutantSampler(const PauliString& target) : target_(target) {
  if (target.is_identity())
    throw std::invalid_argument("CommutantSampler: identity target has no reshaping commutant");
  int n = target.num_qubits();
  mask_ = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  pivot_ = target.first_support();
  // Flipping Q's x-bit at the pivot changes <Q, target> by target's z-bit
  // there, and vice versa. Pick whichever pairs with a set target bit.
  flip_x_ = ((target.z_bits() >> pivot_) & 1) != 0;
}

PauliString CommutantSampler::sample(RandomStream& rng) const {
  RandomStream& r = rng;
  uint64_t x = r.next_u64() & mask_;
  uint64_t z = r.next_u64() & mask_;
  int parity = __builtin_popcountll(x & target_.z_bits()) +
               __builtin_popcountll(z & target_.x_bits());
  if (parity & 1) {
    if (flip_x_) {
      x ^= 1ULL << pivot_;
    } else {
      z ^= 1ULL << pivot_;
    }
  }
  return PauliString(target_.num_qubits(), x, z);
}

std::vector<PauliString> enumerate_commutant(const PauliString& target) {
  int n = target.num_qubits();
  if (n > 8) throw std::invalid_argument("enumerate_commutant: enumeration limited to n <= 8");
  std::vector<PauliString> out;
  out.reserve(1ULL << (2 * n - 1));
  for (uint64_t z = 0; z < (1ULL << n); ++z) {
    for (uint64_t x = 0; x < (1ULL << n); ++x) {
      PauliString q(n, x, z);
      if (commutes(q, target)) out.push_back(q);
    }
  }
  return out;
}

}  // namespace hamlearn
