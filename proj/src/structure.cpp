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

#include "hamlearn/structure.hpp"

#include <cmath>

namespace hamlearn {

std::pair<double, long long> choose_tau_r1(const StructureConfig& cfg) {
  cfg.validate();
  double tau = cfg.tau > 0 ? cfg.tau : 1.0 / (cfg.c * cfg.m_est * cfg.mu_m);
  long long r1 = cfg.r1 > 0
                     ? cfg.r1
                     : static_cast<long long>(
                           std::ceil(std::pow(cfg.c, 3) * cfg.m_est * cfg.m_est * tau * tau));
  return {tau, std::max<long long>(1, r1)};
}

long long theoretical_structure_shots(const StructureConfig& cfg, double delta) {
  cfg.validate();
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("theoretical_structure_shots: delta in (0, 1)");
  double count = 4.0 * cfg.c * cfg.c * cfg.m_est * cfg.m_est *
                 std::log(std::max(2.0, cfg.m_est / delta));
  return static_cast<long long>(std::ceil(count));
}

SupportSet structure_learn_two_copy(EvolutionOracle& oracle, const SparseHamiltonian& hat_h,
                                    const StructureConfig& cfg, const SpamModel& spam,
                                    RandomStream& rng, const std::string& phase) {
  cfg.validate();
  if (hat_h.num_qubits() != oracle.num_qubits())
    throw std::invalid_argument("structure_learn_two_copy: dimension mismatch");
  auto [tau, r1] = choose_tau_r1(cfg);
  auto outcomes = oracle.run_bell_shots(hat_h, tau, r1, cfg.shots, spam, rng, phase);

  SupportSet support;
  for (const auto& label : outcomes) {
    if (label.is_identity()) continue;
    ++support.counts[label];
  }
  return support;
}

}  // namespace hamlearn
