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

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/state.hpp"

namespace hamlearn {

/// Applies exp(-i H t) (tensored with identity on any ancilla qubits above
/// H's register) to the state, t >= 0. Matrix-free Lanczos evolution on the
/// sparse Pauli action, stepped so each substep converges well below 1e-10.
void evolve_exact(QuantumState& state, const SparseHamiltonian& h, double t);

/// Same propagator without the forward-only restriction; used for locally
/// simulated cancellation factors exp(+i H t) (as evolution under -H).
void evolve_local(QuantumState& state, const SparseHamiltonian& h, double t);

}  // namespace hamlearn
