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

#include "hamlearn/dense.hpp"

namespace hamlearn {

namespace {

constexpr int kDenseQubitLimit = 10;

inline std::complex<double> pauli_prefactor(const PauliString& p) {
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[__builtin_popcountll(p.x_bits() & p.z_bits()) & 3];
}

void check_dense(int n) {
  if (n > kDenseQubitLimit)
    throw std::invalid_argument("dense helper: register too large for dense matrices");
}

}  // namespace

Matrix pauli_dense(const PauliString& p) {
  check_dense(p.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  const auto pref = pauli_prefactor(p);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double sign = (__builtin_popcountll(i & p.z_bits()) & 1) ? -1.0 : 1.0;
    m(i ^ p.x_bits(), i) = pref * sign;
  }
  return m;
}

Matrix hamiltonian_dense(const SparseHamiltonian& h) {
  check_dense(h.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : h.terms()) {
    const auto pref = pauli_prefactor(p);
    for (Eigen::Index i = 0; i < dim; ++i) {
      double sign = (__builtin_popcountll(i & p.z_bits()) & 1) ? -1.0 : 1.0;
      m(i ^ p.x_bits(), i) += c * pref * sign;
    }
  }
  return m;
}

Matrix dense_unitary(const SparseHamiltonian& h, double t) {
  Matrix hm = hamiltonian_dense(h);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hm);
  const auto& vals = eig.eigenvalues();
  const Matrix& vecs = eig.eigenvectors();
  Eigen::VectorXcd phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    phases(i) = std::exp(std::complex<double>(0, -vals(i) * t));
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

Matrix matrix_power(Matrix m, long long r) {
  if (r < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  while (r > 0) {
    if (r & 1) result = result * m;
    m = m * m;
    r >>= 1;
  }
  return result;
}

std::complex<double> trace_pauli_dagger_times(const PauliString& p, const Matrix& m) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  if (m.rows() != dim) throw std::invalid_argument("trace_pauli_dagger_times: dimension mismatch");
  const auto pref = pauli_prefactor(p);
  std::complex<double> sum(0, 0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double sign = (__builtin_popcountll(i & p.z_bits()) & 1) ? -1.0 : 1.0;
    sum += std::conj(pref * sign) * m(i ^ p.x_bits(), i);
  }
  return sum;
}

Matrix pauli_times_matrix(const PauliString& p, const Matrix& m) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  if (m.rows() != dim) throw std::invalid_argument("pauli_times_matrix: dimension mismatch");
  const auto pref = pauli_prefactor(p);
  Matrix out(dim, m.cols());
  for (Eigen::Index i = 0; i < dim; ++i) {
    double sign = (__builtin_popcountll(i & p.z_bits()) & 1) ? -1.0 : 1.0;
    out.row(i ^ p.x_bits()) = (pref * sign) * m.row(i);
  }
  return out;
}

Matrix matrix_times_pauli(const Matrix& m, const PauliString& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  if (m.cols() != dim) throw std::invalid_argument("matrix_times_pauli: dimension mismatch");
  const auto pref = pauli_prefactor(p);
  Matrix out(m.rows(), dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    // Column i of M P is pref * sign(i) * column (i ^ x) of M.
    double sign = (__builtin_popcountll(i & p.z_bits()) & 1) ? -1.0 : 1.0;
    out.col(i) = (pref * sign) * m.col(i ^ p.x_bits());
  }
  return out;
}

}  // namespace hamlearn
