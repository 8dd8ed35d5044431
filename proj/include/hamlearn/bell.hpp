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

/// n Bell pairs |Phi+>^(x)n on 2n qubits. System qubits occupy positions
/// 0..n-1 (the low bits), ancillas n..2n-1; pair q is (q, n+q).
QuantumState prepare_bell_pairs(int n);

/// Transversal Bell-basis measurement (CNOT ancilla->system, H on ancilla,
/// computational readout). Returns 2n bits as (system-bit, ancilla-bit) pairs
/// in qubit order; pair (1,0) flags the Psi+ outcome, i.e. the X label.
/// Destructive: the state is consumed.
std::vector<int> measure_bell_basis(QuantumState& state, RandomStream& rng);

/// Exact Bell-outcome distribution of a 2n-qubit state, indexed by
/// z_bits * 2^n + x_bits of the decoded Pauli label (test/diagnostic use).
std::vector<double> bell_basis_distribution(const QuantumState& state);

}  // namespace hamlearn
