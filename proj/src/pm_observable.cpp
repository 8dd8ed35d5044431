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

#include "hamlearn/pm_observable.hpp"

#include <cmath>

namespace hamlearn {

namespace {

// Column states: |+1 eigenstate>, |-1 eigenstate> for each basis letter.
void eigenstate_amplitudes(PauliLetter basis, int sign, cdouble out[2]) {
  switch (basis) {
    case PauliLetter::X:
      out[0] = M_SQRT1_2;
      out[1] = sign > 0 ? M_SQRT1_2 : -M_SQRT1_2;
      return;
    case PauliLetter::Y:
      out[0] = M_SQRT1_2;
      out[1] = sign > 0 ? cdouble(0, M_SQRT1_2) : cdouble(0, -M_SQRT1_2);
      return;
    case PauliLetter::Z:
      out[0] = sign > 0 ? 1.0 : 0.0;
      out[1] = sign > 0 ? 0.0 : 1.0;
      return;
    case PauliLetter::I:
      out[0] = 1.0;
      out[1] = 0.0;
      return;
  }
}

}  // namespace

PmObservable pm_observable(PauliLetter basis, bool minus_obs) {
  // Verified by the t=0 contracts: <Q+> = 1 and <Q-> = 0 on the prepared
  // superposition state.
  switch (basis) {
    case PauliLetter::X:
      return minus_obs ? PmObservable{PauliLetter::Y, -1.0} : PmObservable{PauliLetter::Z, 1.0};
    case PauliLetter::Y:
      return minus_obs ? PmObservable{PauliLetter::X, 1.0} : PmObservable{PauliLetter::Z, 1.0};
    case PauliLetter::Z:
      return minus_obs ? PmObservable{PauliLetter::Y, 1.0} : PmObservable{PauliLetter::X, 1.0};
    case PauliLetter::I:
      break;
  }
  throw std::invalid_argument("pm_observable: basis letter must be non-identity");
}

QuantumState prepare_product_eigenstate(const PauliString& target, int jstar) {
  if (target.is_identity())
    throw std::invalid_argument("prepare_product_eigenstate: identity target");
  if (jstar < 0 || jstar >= target.num_qubits() || target.letter(jstar) == PauliLetter::I)
    throw std::invalid_argument("prepare_product_eigenstate: jstar must be a support site");
  const int n = target.num_qubits();
  QuantumState state(n);

  for (int q = 0; q < n; ++q) {
    cdouble col[2];
    if (q == jstar) {
      // (|+1,beta> + |-1,beta>)/sqrt(2): the +1 eigenstate of Q+.
      PmObservable qp = pm_observable(target.letter(q), false);
      eigenstate_amplitudes(qp.letter, qp.sign > 0 ? 1 : -1, col);
    } else {
      eigenstate_amplitudes(target.letter(q), 1, col);
    }
    cdouble u[2][2] = {{col[0], 0.0}, {col[1], 0.0}};
    // Second column: any completion keeps |0> inputs exact; use the
    // orthogonal complement so the matrix is unitary.
    u[0][1] = -std::conj(col[1]);
    u[1][1] = std::conj(col[0]);
    apply_single_qubit(state, q, u);
  }
  return state;
}

int measure_pm_observable(QuantumState& state, const PauliString& target, int jstar,
                          bool minus_obs, RandomStream& rng) {
  if (jstar < 0 || jstar >= target.num_qubits() || target.letter(jstar) == PauliLetter::I)
    throw std::invalid_argument("measure_pm_observable: jstar must be a support site");
  PmObservable obs = pm_observable(target.letter(jstar), minus_obs);

  // Rotate the observable's eigenbasis onto the computational basis:
  // columns of V are the +-1 eigenstates, apply V^dagger.
  cdouble plus[2], minus_col[2];
  eigenstate_amplitudes(obs.letter, 1, plus);
  eigenstate_amplitudes(obs.letter, -1, minus_col);
  cdouble v_dag[2][2] = {{std::conj(plus[0]), std::conj(plus[1])},
                         {std::conj(minus_col[0]), std::conj(minus_col[1])}};
  apply_single_qubit(state, jstar, v_dag);
  int bit = sample_and_collapse(state, jstar, rng);
  int eigenvalue = bit == 0 ? 1 : -1;
  return static_cast<int>(obs.sign) * eigenvalue;
}

}  // namespace hamlearn
