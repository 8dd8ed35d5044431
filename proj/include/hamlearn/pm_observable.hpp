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

#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"
#include "hamlearn/state.hpp"

namespace hamlearn {

/// Single-qubit flip observable for the frequency-estimation readout:
/// a signed Pauli. Q+ swaps the two eigenstates of the basis letter;
/// Q- does the same with an i / -i phase pair. One Pauli solves each
/// constraint per basis letter, up to the recorded sign.
struct PmObservable {
  PauliLetter letter;
  double sign;
};

/// Solves the flip constraints for the given basis letter.
PmObservable pm_observable(PauliLetter basis, bool minus_obs);

/// Product state |phi_0> for learning the coefficient of `target`: every
/// support qubit sits in the +1 eigenstate of its letter, identity qubits in
/// |0>, and qubit `jstar` in the equal superposition of the two eigenstates.
QuantumState prepare_product_eigenstate(const PauliString& target, int jstar);

/// Reads qubit `jstar` in the Q+ (minus_obs=false) or Q- basis, returning the
/// signed +-1 outcome. Collapses the state.
int measure_pm_observable(QuantumState& state, const PauliString& target, int jstar,
                          bool minus_obs, RandomStream& rng);

}  // namespace hamlearn
