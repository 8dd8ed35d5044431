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

#include "hamlearn/evolve.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hamlearn {

namespace {

// One Lanczos substep: state <- exp(-i H dt) state. Requires |H|_1 * dt to be
// moderate (the caller substeps); the Krylov dimension then converges far
// beyond the 1e-10 accuracy target.
void lanczos_step(QuantumState& state, const SparseHamiltonian& h, double dt, int max_dim) {
  const size_t dim = state.dim();
  const int m_cap = static_cast<int>(std::min<size_t>(max_dim, dim));

  std::vector<std::vector<cdouble>> basis;
  basis.reserve(m_cap);
  std::vector<double> alpha, beta;

  double norm0 = state.norm();
  if (norm0 == 0.0) return;
  basis.push_back(state.amplitudes());
  for (auto& a : basis[0]) a /= norm0;

  std::vector<cdouble> w(dim);
  int m = 0;
  for (int j = 0; j < m_cap; ++j) {
    apply_hamiltonian(basis[j], h, w);
    if (j > 0) {
      for (size_t i = 0; i < dim; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
    }
    cdouble a(0, 0);
    for (size_t i = 0; i < dim; ++i) a += std::conj(basis[j][i]) * w[i];
    alpha.push_back(a.real());
    for (size_t i = 0; i < dim; ++i) w[i] -= alpha[j] * basis[j][i];
    // Full reorthogonalization: registers are small, stability is cheap.
    for (int k = 0; k <= j; ++k) {
      cdouble c(0, 0);
      for (size_t i = 0; i < dim; ++i) c += std::conj(basis[k][i]) * w[i];
      for (size_t i = 0; i < dim; ++i) w[i] -= c * basis[k][i];
    }
    double b = 0.0;
    for (const auto& v : w) b += std::norm(v);
    b = std::sqrt(b);
    m = j + 1;
    if (b < 1e-14 || m == m_cap) break;
    beta.push_back(b);
    basis.push_back(w);
    for (auto& v : basis.back()) v /= b;
  }

  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
  const Eigen::MatrixXd& vecs = eig.eigenvectors();
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(m);
  for (int i = 0; i < m; ++i) {
    double phi = -eig.eigenvalues()(i) * dt;
    cdouble c = vecs(0, i) * cdouble(std::cos(phi), std::sin(phi));  // (V^T e1)_i * phase
    for (int j = 0; j < m; ++j) y(j) += vecs(j, i) * c;
  }

  auto& amps = state.amplitudes();
  std::fill(amps.begin(), amps.end(), cdouble(0, 0));
  for (int j = 0; j < m; ++j) {
    cdouble c = norm0 * y(j);
    for (size_t i = 0; i < dim; ++i) amps[i] += c * basis[j][i];
  }
}

void evolve_signed(QuantumState& state, const SparseHamiltonian& h, double t) {
  if (h.num_qubits() > state.num_qubits())
    throw std::invalid_argument("evolve: Hamiltonian register exceeds the state register");
  if (t == 0.0 || h.empty()) return;

  // Single-term Hamiltonians are exact Pauli rotations.
  if (h.num_terms() == 1) {
    const auto& [p, c] = *h.terms().begin();
    apply_pauli_rotation(state, p, c * t);
    return;
  }

  double budget = h.one_norm() * std::abs(t);
  int substeps = std::max(1, static_cast<int>(std::ceil(budget / 5.0)));
  double dt = t / substeps;
  for (int s = 0; s < substeps; ++s) lanczos_step(state, h, dt, 48);
}

}  // namespace

void evolve_exact(QuantumState& state, const SparseHamiltonian& h, double t) {
  if (t < 0)
    throw std::invalid_argument("evolve_exact: forward-only evolution, t must be >= 0");
  evolve_signed(state, h, t);
}

void evolve_local(QuantumState& state, const SparseHamiltonian& h, double t) {
  evolve_signed(state, h, t);
}

}  // namespace hamlearn
