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

#include "hamlearn/oracle.hpp"
#include "hamlearn/structure.hpp"

namespace hamlearn {

/// Pauli error rates p(k): probabilities over Pauli strings, summing to 1.
struct PauliRateVector {
  std::map<PauliString, double> rates;

  double rate(const PauliString& p) const {
    auto it = rates.find(p);
    return it == rates.end() ? 0.0 : it->second;
  }
  double sum() const {
    double s = 0;
    for (const auto& [p, r] : rates) s += r;
    return s;
  }
};

/// Exact Pauli error rates of the unitary channel e^{-iHt}: the squared
/// Pauli amplitudes of its single Kraus operator. Brute-force oracle,
/// n <= 6.
PauliRateVector pauli_error_rates_exact(const SparseHamiltonian& h, double t);

/// Samples needed by population_recover for (eps1, delta) at n qubits.
long long population_recovery_samples(int n, double eps1, double delta);

/// Sparse population recovery from six-state / random-axis twirl samples.
/// Branch-and-prune over Pauli-letter prefixes: the per-qubit estimator
/// kernel makes every prefix mass an unbiased sample average, suffix qubits
/// dropping out exactly; prefixes with estimated mass below eps1/2 are
/// pruned. Returns at most 4/eps1 entries; l-infinity error <= eps1 with
/// probability >= 1 - delta at the required sample count.
PauliRateVector population_recover(const std::vector<TwirlSample>& samples, double eps1,
                                   double delta);

/// Ancilla-free structure learning: twirl samples of the cancelled evolution
/// at the pass's tau, population recovery at eps1 = gamma/2, and thresholding
/// at gamma/2, where gamma is the operational detection-rate floor for terms
/// at the threshold mu_m.
SupportSet structure_learn_single_copy(EvolutionOracle& oracle, const SparseHamiltonian& hat_h,
                                       const StructureConfig& cfg, const SpamModel& spam,
                                       RandomStream& rng, double delta = 0.05,
                                       const std::string& phase = "structure");

}  // namespace hamlearn
