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

#include "hamlearn/state.hpp"

#include <cmath>

namespace hamlearn {

double QuantumState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void QuantumState::normalize() {
  double n = norm();
  if (n == 0.0) throw std::runtime_error("QuantumState: cannot normalize zero vector");
  for (auto& a : amps_) a /= n;
}

double QuantumState::overlap(const QuantumState& other) const {
  if (k_ != other.k_) throw std::invalid_argument("QuantumState: dimension mismatch");
  cdouble s(0, 0);
  for (size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return std::abs(s);
}

namespace {

// P|i> = i^{y_count} (-1)^{popcount(i & z)} |i ^ x>.
inline cdouble pauli_prefactor(const PauliString& p) {
  static const cdouble ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[__builtin_popcountll(p.x_bits() & p.z_bits()) & 3];
}

void check_fits(const QuantumState& state, int n) {
  if (n > state.num_qubits())
    throw std::invalid_argument("state op: operator acts on more qubits than the register has");
}

}  // namespace

void apply_pauli(QuantumState& state, const PauliString& p) {
  check_fits(state, p.num_qubits());
  const uint64_t x = p.x_bits(), z = p.z_bits();
  const cdouble pref = pauli_prefactor(p);
  auto& a = state.amplitudes();
  const size_t dim = a.size();
  if (x == 0) {
    for (size_t i = 0; i < dim; ++i) {
      if (__builtin_popcountll(i & z) & 1) a[i] = -a[i];
      a[i] *= pref;
    }
    return;
  }
  for (size_t i = 0; i < dim; ++i) {
    size_t j = i ^ x;
    if (j < i) continue;
    cdouble ai = a[i], aj = a[j];
    double si = (__builtin_popcountll(i & z) & 1) ? -1.0 : 1.0;
    double sj = (__builtin_popcountll(j & z) & 1) ? -1.0 : 1.0;
    a[j] = pref * si * ai;
    a[i] = pref * sj * aj;
  }
}

void apply_pauli_rotation(QuantumState& state, const PauliString& p, double theta) {
  check_fits(state, p.num_qubits());
  const double c = std::cos(theta), s = std::sin(theta);
  const cdouble mis(0, -s);
  const uint64_t x = p.x_bits(), z = p.z_bits();
  const cdouble pref = pauli_prefactor(p);
  auto& a = state.amplitudes();
  const size_t dim = a.size();
  if (p.is_identity()) {
    cdouble f = c + mis;
    for (auto& v : a) v *= f;
    return;
  }
  if (x == 0) {
    for (size_t i = 0; i < dim; ++i) {
      double sign = (__builtin_popcountll(i & z) & 1) ? -1.0 : 1.0;
      a[i] *= c + mis * sign;
    }
    return;
  }
  for (size_t i = 0; i < dim; ++i) {
    size_t j = i ^ x;
    if (j < i) continue;
    cdouble ai = a[i], aj = a[j];
    double si = (__builtin_popcountll(i & z) & 1) ? -1.0 : 1.0;
    double sj = (__builtin_popcountll(j & z) & 1) ? -1.0 : 1.0;
    a[i] = c * ai + mis * pref * sj * aj;
    a[j] = c * aj + mis * pref * si * ai;
  }
}

void accumulate_pauli(const std::vector<cdouble>& x, const PauliString& p, double coeff,
                      std::vector<cdouble>& y) {
  const uint64_t xm = p.x_bits(), zm = p.z_bits();
  const cdouble f = pauli_prefactor(p) * coeff;
  const size_t dim = x.size();
  for (size_t i = 0; i < dim; ++i) {
    size_t j = i ^ xm;
    double sign = (__builtin_popcountll(i & zm) & 1) ? -1.0 : 1.0;
    y[j] += f * sign * x[i];
  }
}

void apply_hamiltonian(const std::vector<cdouble>& x, const SparseHamiltonian& h,
                       std::vector<cdouble>& y) {
  std::fill(y.begin(), y.end(), cdouble(0, 0));
  for (const auto& [p, c] : h.terms()) accumulate_pauli(x, p, c, y);
}

void apply_single_qubit(QuantumState& state, int q, const cdouble u[2][2]) {
  check_fits(state, q + 1);
  auto& a = state.amplitudes();
  const size_t bit = size_t{1} << q;
  const size_t dim = a.size();
  for (size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    size_t j = i | bit;
    cdouble a0 = a[i], a1 = a[j];
    a[i] = u[0][0] * a0 + u[0][1] * a1;
    a[j] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void apply_cnot(QuantumState& state, int control, int target) {
  check_fits(state, std::max(control, target) + 1);
  auto& a = state.amplitudes();
  const size_t cbit = size_t{1} << control, tbit = size_t{1} << target;
  const size_t dim = a.size();
  for (size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
  }
}

uint64_t sample_all_qubits(const QuantumState& state, RandomStream& rng) {
  double u = rng.uniform();
  double acc = 0.0;
  const auto& a = state.amplitudes();
  for (size_t i = 0; i < a.size(); ++i) {
    acc += std::norm(a[i]);
    if (u < acc) return i;
  }
  return a.size() - 1;  // guard against rounding at the top end
}

int sample_and_collapse(QuantumState& state, int q, RandomStream& rng) {
  auto& a = state.amplitudes();
  const size_t bit = size_t{1} << q;
  double p1 = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    if (i & bit) p1 += std::norm(a[i]);
  int outcome = rng.uniform() < p1 ? 1 : 0;
  double keep = outcome ? p1 : 1.0 - p1;
  double scale = keep > 0 ? 1.0 / std::sqrt(keep) : 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    bool one = (i & bit) != 0;
    if (one == (outcome == 1)) {
      a[i] *= scale;
    } else {
      a[i] = 0.0;
    }
  }
  return outcome;
}

}  // namespace hamlearn
