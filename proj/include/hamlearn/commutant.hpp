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

#include <vector>

#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

/// Uniform sampler over the commutant of a fixed non-identity Pauli string:
/// the 2^(2n-1) strings (identity included) that commute with the target.
///
/// Draws a uniformly random 2n-bit symplectic vector and, when its symplectic
/// product with the target is odd, flips one predetermined coordinate paired
/// with a non-identity target bit. The flip toggles the product, giving exact
/// uniformity over the commutant without rejection.
class CommutantSampler {
 public:
  explicit CommutantSampler(const PauliString& target);

  const PauliString& target() const { return target_; }

  PauliString sample(RandomStream& rng) const;

 private:
  PauliString target_;
  uint64_t mask_;
  bool flip_x_;   // true: flip the x-bit at the pivot, else the z-bit
  int pivot_;
};

inline PauliString sample_commutant(const CommutantSampler& sampler, RandomStream& rng) {
  return sampler.sample(rng);
}

/// Enumerates the full commutant (test-scale n only).
std::vector<PauliString> enumerate_commutant(const PauliString& target);

}  // namespace hamlearn
