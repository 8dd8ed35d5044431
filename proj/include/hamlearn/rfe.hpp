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

#include <functional>
#include <optional>
#include <vector>

#include "hamlearn/oracle.hpp"
#include "hamlearn/structure.hpp"

namespace hamlearn {

/// Trotter-step rule for Hamiltonian reshaping: r2 = ceil(c * M_est^2 * t^2)
/// unless overridden. The default constant keeps the reshaping channel's
/// diamond error 4 M^2 t^2 / r2 below 1/(3 sqrt(2)).
struct ReshapeConfig {
  int m_est = 1;
  double c = 48.0;
  std::function<long long(int, double)> r2_rule;  // optional (M_est, t) -> r2

  long long r2_for(double t) const {
    if (r2_rule) return std::max<long long>(1, r2_rule(m_est, t));
    double r = std::ceil(c * static_cast<double>(m_est) * m_est * t * t);
    return std::max<long long>(1, static_cast<long long>(r));
  }
};

/// Robust-frequency-estimation knobs on top of the reshaping rule.
///
/// Without a shot budget, each signal is the median of `medians` batch
/// averages of `batch_size` +-1 readouts (batch 54 satisfies the Chebyshev
/// requirement; medians auto-sized from fail_prob when 0). A positive
/// shot_budget instead caps rounds x medians x 2 observables x batch,
/// reallocating floor-evenly across rounds.
struct RfeConfig {
  ReshapeConfig reshape;
  double fail_prob = 0.01;   // per-estimate failure budget q
  int medians = 0;           // odd batch count per median; 0 = auto from q
  int batch_size = 54;
  long long shot_budget = 0;
  double theta_bound = 2.0;  // A; |theta| = |2 mu| <= 2
};

struct RfeRound {
  double a = 0, b = 0;  // interval before the update
  double t = 0;         // evolution time used
  double x = 0, y = 0;  // cosine / sine signals
};

struct CoefficientEstimate {
  PauliString pauli;
  double mu_hat = 0;
  double eps_target = 0;
  double stderr_final = 0;  // half-width of the final mu interval
  double evolution_time_spent = 0;
  bool accepted = false;
  int jstar = 0;
  std::vector<RfeRound> rounds;
};

/// Number of interval-refinement rounds for accuracy eps on mu (theta = 2mu).
int rfe_round_count(double eps, double theta_bound);

/// One sample of the reshaping channel: r2 segments of Q_k (oracle query of
/// t/r2) Q_k with Q_k drawn uniformly from the commutant of `target`.
/// Honest per-state realization; the batched runner reproduces its statistics.
void reshaped_evolve(QuantumState& state, EvolutionOracle& oracle, const PauliString& target,
                     double t, const ReshapeConfig& cfg, RandomStream& rng,
                     const SparseHamiltonian* cancel = nullptr,
                     const std::string& phase = "coeff");

/// Median of `medians` batch averages of the +-1 readout at evolution time t.
double rfe_signal(EvolutionOracle& oracle, const PauliString& target, int jstar, double t,
                  bool minus_obs, int medians, int batch_size, const ReshapeConfig& cfg,
                  const SpamModel& spam, RandomStream& rng,
                  const SparseHamiltonian* cancel = nullptr,
                  const std::string& phase = "coeff");

/// Core interval-refinement estimator on an abstract signal provider
/// (t -> (X, Y) with X ~ cos(theta t), Y ~ sin(theta t)). `snap` optionally
/// rounds requested times to realizable ones (fixed-step oracles). Returns
/// the final interval [a, b] for theta along with the per-round trace.
struct RfeIntervalResult {
  double a = 0, b = 0;
  std::vector<RfeRound> rounds;
};
RfeIntervalResult rfe_refine_interval(
    const std::function<std::pair<double, double>(double, int)>& signal, double eps,
    double theta_bound, const std::function<double(double)>& snap = nullptr);

/// Full robust frequency estimation of one coefficient through the oracle.
CoefficientEstimate robust_frequency_estimate(EvolutionOracle& oracle, const PauliString& target,
                                              double eps, const RfeConfig& cfg,
                                              const SpamModel& spam, RandomStream& rng,
                                              const SparseHamiltonian* cancel = nullptr,
                                              const std::string& phase = "coeff");

/// Runs robust_frequency_estimate on every candidate; estimates with
/// |mu_hat| < mu_m / 2 are marked rejected (false-positive filter). jstar is
/// the first support site of each candidate. Candidates run concurrently when
/// `threads` > 1, with deterministic per-candidate substreams and in-order
/// ledger merging.
std::vector<CoefficientEstimate> learn_coefficients(EvolutionOracle& oracle,
                                                    const SupportSet& candidates, double eps,
                                                    double mu_m, const RfeConfig& cfg,
                                                    const SpamModel& spam, RandomStream& rng,
                                                    const SparseHamiltonian* cancel = nullptr,
                                                    const std::string& phase = "coeff",
                                                    int threads = 1);

}  // namespace hamlearn
