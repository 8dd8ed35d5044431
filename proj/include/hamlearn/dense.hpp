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

#include <Eigen/Dense>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/pauli.hpp"

namespace hamlearn {

// Dense helpers for the simulation engines. Registers here are small enough
// (n <= 10 system qubits) that 2^n x 2^n matrices are cheap; the generic
// oracle path never materializes these.

using Matrix = Eigen::MatrixXcd;

/// Dense matrix of a Pauli string (dimension 2^n).
Matrix pauli_dense(const PauliString& p);

/// Dense Hermitian matrix of a sparse Pauli Hamiltonian.
Matrix hamiltonian_dense(const SparseHamiltonian& h);

/// exp(-i H t) via Hermitian eigendecomposition (stable for any t).
Matrix dense_unitary(const SparseHamiltonian& h, double t);

/// M^r by binary powering.
Matrix matrix_power(Matrix m, long long r);

/// tr(P^dagger M) without building P.
std::complex<double> trace_pauli_dagger_times(const PauliString& p, const Matrix& m);

/// P * M and M * P without building P (signed row/column permutation).
Matrix pauli_times_matrix(const PauliString& p, const Matrix& m);
Matrix matrix_times_pauli(const Matrix& m, const PauliString& p);

}  // namespace hamlearn
