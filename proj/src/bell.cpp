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

#include "hamlearn/bell.hpp"

#include <cmath>

namespace hamlearn {

namespace {

const cdouble kHadamard[2][2] = {{{M_SQRT1_2, 0}, {M_SQRT1_2, 0}},
                                 {{M_SQRT1_2, 0}, {-M_SQRT1_2, 0}}};

// Maps Bell pairs to the computational basis: CNOT(ancilla -> system) then H
// on the ancilla, for every pair.
void unmap_bell(QuantumState& state) {
  int n = state.num_qubits() / 2;
  for (int q = 0; q < n; ++q) {
    apply_cnot(state, n + q, q);
    apply_single_qubit(state, n + q, kHadamard);
  }
}

std::vector<int> bits_from_basis_index(uint64_t idx, int n) {
  std::vector<int> bits(2 * n);
  for (int q = 0; q < n; ++q) {
    bits[2 * q] = (idx >> q) & 1;            // system line
    bits[2 * q + 1] = (idx >> (n + q)) & 1;  // ancilla line
  }
  return bits;
}

}  // namespace

QuantumState prepare_bell_pairs(int n) {
  QuantumState state(2 * n);
  for (int q = 0; q < n; ++q) {
    apply_single_qubit(state, n + q, kHadamard);
    apply_cnot(state, n + q, q);
  }
  return state;
}

std::vector<int> measure_bell_basis(QuantumState& state, RandomStream& rng) {
  if (state.num_qubits() % 2 != 0)
    throw std::invalid_argument("measure_bell_basis: register must hold 2n qubits");
  int n = state.num_qubits() / 2;
  unmap_bell(state);
  uint64_t idx = sample_all_qubits(state, rng);
  return bits_from_basis_index(idx, n);
}

std::vector<double> bell_basis_distribution(const QuantumState& state) {
  if (state.num_qubits() % 2 != 0)
    throw std::invalid_argument("bell_basis_distribution: register must hold 2n qubits");
  QuantumState copy = state;
  unmap_bell(copy);
  int n = copy.num_qubits() / 2;
  std::vector<double> probs(copy.dim(), 0.0);
  for (uint64_t idx = 0; idx < copy.dim(); ++idx) {
    PauliString label = bell_outcome_to_pauli(bits_from_basis_index(idx, n));
    probs[(label.z_bits() << n) | label.x_bits()] += std::norm(copy[idx]);
  }
  return probs;
}

}  // namespace hamlearn
