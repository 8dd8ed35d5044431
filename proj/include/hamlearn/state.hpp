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

#include <complex>
#include <vector>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

using cdouble = std::complex<double>;

/// Dense normalized statevector over k qubits. Qubit q maps to bit q of the
/// amplitude index (qubit 0 = least significant bit).
class QuantumState {
 public:
  explicit QuantumState(int k)
      : k_(k), amps_(size_t{1} << k, cdouble(0, 0)) {
    if (k < 1 || k > 26) throw std::invalid_argument("QuantumState: qubit count out of range");
    amps_[0] = 1.0;
  }

  int num_qubits() const { return k_; }
  size_t dim() const { return amps_.size(); }

  std::vector<cdouble>& amplitudes() { return amps_; }
  const std::vector<cdouble>& amplitudes() const { return amps_; }

  cdouble& operator[](size_t i) { return amps_[i]; }
  const cdouble& operator[](size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  /// |<this|other>|.
  double overlap(const QuantumState& other) const;

 private:
  int k_;
  std::vector<cdouble> amps_;
};

/// In-place action of a Pauli string on the low `p.num_qubits()` qubits.
void apply_pauli(QuantumState& state, const PauliString& p);

/// In-place exp(-i theta P) on the low qubits: cos(theta) I - i sin(theta) P.
void apply_pauli_rotation(QuantumState& state, const PauliString& p, double theta);

/// y += coeff * P x, both over the full register (P on low qubits).
void accumulate_pauli(const std::vector<cdouble>& x, const PauliString& p, double coeff,
                      std::vector<cdouble>& y);

/// Sparse Hamiltonian action y = H x on the low qubits of the register.
void apply_hamiltonian(const std::vector<cdouble>& x, const SparseHamiltonian& h,
                       std::vector<cdouble>& y);

/// Single-qubit unitary on qubit `q` given as a row-major 2x2 matrix.
void apply_single_qubit(QuantumState& state, int q, const cdouble u[2][2]);

/// CNOT with the given control and target qubits.
void apply_cnot(QuantumState& state, int control, int target);

/// Born-rule sample of all k qubits in the computational basis; destructive
/// only in the sense that callers usually discard the state afterwards.
uint64_t sample_all_qubits(const QuantumState& state, RandomStream& rng);

/// Born-rule sample of one qubit; collapses the state.
int sample_and_collapse(QuantumState& state, int q, RandomStream& rng);

}  // namespace hamlearn
