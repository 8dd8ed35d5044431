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

#include <vector>

#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"
#include "hamlearn/state.hpp"

namespace hamlearn {

/// State-preparation and measurement noise, bounded in diamond norm by
/// eps_spam in total. Preparation noise is a per-qubit "replace by the
/// maximally mixed state with probability prep_flip" channel, realized
/// stochastically as a uniform Pauli insertion; measurement noise flips each
/// classical bit independently with probability meas_flip. The budget is
/// split half/half between the phases and evenly across qubits.
struct SpamModel {
  double eps_spam = 0.0;
  double prep_flip = 0.0;  // per-qubit
  double meas_flip = 0.0;  // per-bit

  static SpamModel off() { return SpamModel{}; }

  /// Derives per-qubit rates from a total diamond-norm budget for a register
  /// of `qubits` noisy qubits (2n for Bell-pair experiments).
  static SpamModel from_budget(double eps_spam, int qubits) {
    if (eps_spam < 0 || eps_spam > 1)
      throw std::invalid_argument("SpamModel: eps_spam must be in [0, 1]");
    SpamModel m;
    m.eps_spam = eps_spam;
    if (qubits > 0) {
      m.prep_flip = eps_spam / (4.0 * qubits);
      m.meas_flip = eps_spam / (4.0 * qubits);
    }
    return m;
  }

  bool enabled() const { return prep_flip > 0 || meas_flip > 0; }
};

enum class SpamPhase { Prep, Meas };

/// Preparation phase: stochastic per-qubit uniform Pauli insertion at rate
/// prep_flip (the I/X/Y/Z letters equally likely, i.e. replacement by I/2).
void apply_spam(const SpamModel& model, SpamPhase phase, QuantumState& state, RandomStream& rng);

/// Measurement phase: independent classical bit flips at rate meas_flip.
void apply_spam(const SpamModel& model, SpamPhase phase, std::vector<int>& bits,
                RandomStream& rng);

/// Draws the preparation-noise Pauli pattern for a `qubits`-wide register.
PauliString draw_prep_pattern(const SpamModel& model, int qubits, RandomStream& rng);

}  // namespace hamlearn
