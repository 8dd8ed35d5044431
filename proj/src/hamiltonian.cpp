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

#include "hamlearn/hamiltonian.hpp"

#include <cmath>

namespace hamlearn {

namespace {
constexpr double kPruneTolerance = 1e-14;
}

void SparseHamiltonian::add_term(const PauliString& p, double coeff) {
  if (p.num_qubits() != n_) throw std::invalid_argument("SparseHamiltonian: dimension mismatch");
  if (p.is_identity()) {
    if (coeff != 0.0) throw std::invalid_argument("SparseHamiltonian: identity term not allowed");
    return;
  }
  double next = terms_.count(p) ? terms_[p] + coeff : coeff;
  if (std::abs(next) <= kPruneTolerance) {
    terms_.erase(p);
  } else {
    terms_[p] = next;
  }
}

void SparseHamiltonian::set_term(const PauliString& p, double coeff) {
  if (p.num_qubits() != n_) throw std::invalid_argument("SparseHamiltonian: dimension mismatch");
  if (p.is_identity()) throw std::invalid_argument("SparseHamiltonian: identity term not allowed");
  if (std::abs(coeff) <= kPruneTolerance) {
    terms_.erase(p);
  } else {
    terms_[p] = coeff;
  }
}

double SparseHamiltonian::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [p, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

double SparseHamiltonian::one_norm() const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) sum += std::abs(c);
  return sum;
}

SparseHamiltonian SparseHamiltonian::scaled(double factor) const {
  SparseHamiltonian out(n_);
  if (factor == 0.0) return out;
  for (const auto& [p, c] : terms_) out.set_term(p, c * factor);
  return out;
}

SparseHamiltonian ham_combine(const SparseHamiltonian& a, const SparseHamiltonian& b,
                              double scale_b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("ham_combine: dimension mismatch");
  SparseHamiltonian out = a;
  for (const auto& [p, c] : b.terms()) out.add_term(p, scale_b * c);
  return out;
}

}  // namespace hamlearn
