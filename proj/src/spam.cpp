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

#include "hamlearn/spam.hpp"

namespace hamlearn {

PauliString draw_prep_pattern(const SpamModel& model, int qubits, RandomStream& rng) {
  uint64_t x = 0, z = 0;
  for (int q = 0; q < qubits; ++q) {
    if (!rng.bernoulli(model.prep_flip)) continue;
    switch (rng.uniform_u64(4)) {
      case 0: break;  // I: replacement by the mixed state keeps identity too
      case 1: x |= 1ULL << q; break;
      case 2: x |= 1ULL << q; z |= 1ULL << q; break;
      case 3: z |= 1ULL << q; break;
    }
  }
  return PauliString(qubits, x, z);
}

void apply_spam(const SpamModel& model, SpamPhase phase, QuantumState& state, RandomStream& rng) {
  if (phase != SpamPhase::Prep)
    throw std::invalid_argument("apply_spam: state overload is the preparation phase");
  if (!model.enabled()) return;
  PauliString pattern = draw_prep_pattern(model, state.num_qubits(), rng);
  if (!pattern.is_identity()) apply_pauli(state, pattern);
}

void apply_spam(const SpamModel& model, SpamPhase phase, std::vector<int>& bits,
                RandomStream& rng) {
  if (phase != SpamPhase::Meas)
    throw std::invalid_argument("apply_spam: bit overload is the measurement phase");
  if (model.meas_flip <= 0) return;
  for (auto& b : bits)
    if (rng.bernoulli(model.meas_flip)) b ^= 1;
}

}  // namespace hamlearn
