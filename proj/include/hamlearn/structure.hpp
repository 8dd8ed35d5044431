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

#include "hamlearn/oracle.hpp"

namespace hamlearn {

/// Knobs for one structure-learning pass. The shot count is an explicit
/// budget (2000 by default); theoretical_shots gives the union-bound count
/// for scaling studies. tau/r1 are derived from (C, M_est, mu_m) when zero.
struct StructureConfig {
  double mu_m = 0.5;    // coefficient threshold for this pass
  int m_est = 1;        // estimated number of Hamiltonian terms
  long long shots = 2000;
  double c = 4.0;       // the "large constant" suppressing higher orders
  double tau = 0.0;     // per-shot evolution time override (0 = derive)
  long long r1 = 0;     // Trotter steps override (0 = derive)

  void validate() const {
    if (!(mu_m > 0 && mu_m <= 1)) throw std::invalid_argument("StructureConfig: mu_m in (0, 1]");
    if (shots < 1) throw std::invalid_argument("StructureConfig: shots >= 1");
    if (c < 2) throw std::invalid_argument("StructureConfig: C >= 2");
    if (m_est < 1) throw std::invalid_argument("StructureConfig: M_est >= 1");
  }
};

/// Candidate support with observed Bell-sampling frequencies. Never contains
/// the identity string; every candidate was seen at least once.
struct SupportSet {
  std::map<PauliString, long long> counts;

  bool contains(const PauliString& p) const { return counts.count(p) > 0; }
  size_t size() const { return counts.size(); }
};

/// tau = 1/(C M mu_m); r1 = ceil(C^3 M^2 tau^2) steps so the cancellation
/// error keeps its 1/C^3 suppression for any tau (derived or overridden).
std::pair<double, long long> choose_tau_r1(const StructureConfig& cfg);

/// Union-bound shot count for sampling every above-threshold term at least
/// once with probability 1 - delta.
long long theoretical_structure_shots(const StructureConfig& cfg, double delta);

/// Two-copy structure learning: `shots` rounds of Bell-pair preparation,
/// Trotterized cancellation of hat_h, and Bell-basis readout; returns every
/// nontrivially observed string with its count (false positives included,
/// they are filtered by coefficient learning downstream).
SupportSet structure_learn_two_copy(EvolutionOracle& oracle, const SparseHamiltonian& hat_h,
                                    const StructureConfig& cfg, const SpamModel& spam,
                                    RandomStream& rng, const std::string& phase = "structure");

}  // namespace hamlearn
