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

#include <map>
#include <string>

#include "hamlearn/pauli.hpp"

namespace hamlearn {

/// Sparse Pauli Hamiltonian: a map from PauliString to a real coefficient
/// (rad per time unit). Holds no identity term and no zero entries. The
/// learner-facing convention keeps every |coefficient| <= 1; physical models
/// carry an explicit scale factor next to the normalized operator.
class SparseHamiltonian {
 public:
  explicit SparseHamiltonian(int n) : n_(n) {
    if (n < 1 || n > 32) throw std::invalid_argument("SparseHamiltonian: qubit count out of range");
  }

  int num_qubits() const { return n_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }

  const std::map<PauliString, double>& terms() const { return terms_; }

  double coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0.0 : it->second;
  }

  /// Adds `coeff * p`, pruning the entry if the result is (numerically) zero.
  void add_term(const PauliString& p, double coeff);

  void set_term(const PauliString& p, double coeff);

  /// Largest |coefficient|; 0 for the empty Hamiltonian.
  double max_abs_coefficient() const;

  /// Sum of |coefficients| (an operator-norm upper bound).
  double one_norm() const;

  SparseHamiltonian scaled(double factor) const;

  bool operator==(const SparseHamiltonian& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

/// Termwise a + scale_b * b with zero-coefficient entries pruned.
SparseHamiltonian ham_combine(const SparseHamiltonian& a, const SparseHamiltonian& b,
                              double scale_b);

}  // namespace hamlearn
