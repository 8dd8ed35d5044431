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

#include "hamlearn/rfe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hamlearn/commutant.hpp"

namespace hamlearn {

int rfe_round_count(double eps, double theta_bound) {
  if (eps <= 0) throw std::invalid_argument("rfe_round_count: eps must be positive");
  double lambda = 2.0 * eps / 3.0;  // theta-accuracy 2*eps, stop width 2*lambda
  double rounds = std::log(theta_bound / lambda) / std::log(1.5);
  return std::max(1, static_cast<int>(std::ceil(rounds - 1e-12)));
}

void reshaped_evolve(QuantumState& state, EvolutionOracle& oracle, const PauliString& target,
                     double t, const ReshapeConfig& cfg, RandomStream& rng,
                     const SparseHamiltonian* cancel, const std::string& phase) {
  if (target.is_identity()) throw std::invalid_argument("reshaped_evolve: identity target");
  if (t < 0) throw std::invalid_argument("reshaped_evolve: t must be >= 0");
  long long r2 = cfg.r2_for(t);
  if (oracle.mode() == OracleMode::FixedStep) {
    r2 = std::max<long long>(1, std::llround(t / oracle.step()));
  }
  double seg = t / static_cast<double>(r2);
  CommutantSampler sampler(target);
  std::optional<SparseHamiltonian> neg;
  if (cancel != nullptr && !cancel->empty()) neg = cancel->scaled(-1.0);
  for (long long k = 0; k < r2; ++k) {
    PauliString q = sampler.sample(rng);
    if (!q.is_identity()) apply_pauli(state, q);
    if (neg) evolve_local(state, *neg, seg);  // e^{+i hat_H seg} first within the segment
    oracle.evolve(state, seg, phase);
    if (!q.is_identity()) apply_pauli(state, q);
  }
}

double rfe_signal(EvolutionOracle& oracle, const PauliString& target, int jstar, double t,
                  bool minus_obs, int medians, int batch_size, const ReshapeConfig& cfg,
                  const SpamModel& spam, RandomStream& rng, const SparseHamiltonian* cancel,
                  const std::string& phase) {
  if (medians < 1 || medians % 2 == 0)
    throw std::invalid_argument("rfe_signal: median batch count must be odd and >= 1");
  if (batch_size < 1) throw std::invalid_argument("rfe_signal: batch size must be >= 1");
  long long r2 = cfg.r2_for(t);
  if (oracle.mode() == OracleMode::FixedStep)
    r2 = std::max<long long>(1, std::llround(t / oracle.step()));

  std::vector<double> batch_means;
  batch_means.reserve(medians);
  for (int b = 0; b < medians; ++b) {
    auto shots =
        oracle.run_rfe_shots(target, jstar, minus_obs, t, r2, batch_size, cancel, spam, rng, phase);
    double sum = 0;
    for (int v : shots) sum += v;
    batch_means.push_back(sum / batch_size);
  }
  std::sort(batch_means.begin(), batch_means.end());
  return batch_means[medians / 2];
}

RfeIntervalResult rfe_refine_interval(
    const std::function<std::pair<double, double>(double, int)>& signal, double eps,
    double theta_bound, const std::function<double(double)>& snap) {
  RfeIntervalResult res;
  res.a = -theta_bound;
  res.b = theta_bound;
  const int rounds = rfe_round_count(eps, theta_bound);
  for (int l = 0; l < rounds; ++l) {
    double t = M_PI / (res.b - res.a);
    if (snap) t = snap(t);
    auto [x, y] = signal(t, l);
    res.rounds.push_back({res.a, res.b, t, x, y});
    // Branch test of the overlapping-interval discriminator: the sign of
    // Im(e^{-i (a+b) t / 2} (X + iY)) separates theta in [a, (a+2b)/3] from
    // theta in [(2a+b)/3, b].
    double phi = 0.5 * (res.a + res.b) * t;
    double im = y * std::cos(phi) - x * std::sin(phi);
    if (im <= 0) {
      res.b = (res.a + 2.0 * res.b) / 3.0;
    } else {
      res.a = (2.0 * res.a + res.b) / 3.0;
    }
  }
  return res;
}

namespace {

int auto_median_count(double q, int rounds) {
  double m = std::ceil(std::log(std::max(2.0, rounds / q)));
  int count = std::max(1, static_cast<int>(m));
  return count % 2 == 0 ? count + 1 : count;
}

}  // namespace

CoefficientEstimate robust_frequency_estimate(EvolutionOracle& oracle, const PauliString& target,
                                              double eps, const RfeConfig& cfg,
                                              const SpamModel& spam, RandomStream& rng,
                                              const SparseHamiltonian* cancel,
                                              const std::string& phase) {
  if (eps <= 0) throw std::invalid_argument("robust_frequency_estimate: eps must be positive");
  if (target.is_identity())
    throw std::invalid_argument("robust_frequency_estimate: identity target");
  const int jstar = target.first_support();
  const int rounds = rfe_round_count(eps, cfg.theta_bound);

  int medians = cfg.medians > 0 ? cfg.medians : auto_median_count(cfg.fail_prob, rounds);
  if (medians % 2 == 0) ++medians;
  long long batch = cfg.batch_size;
  if (cfg.shot_budget > 0) {
    batch = std::max<long long>(1, cfg.shot_budget / (2LL * rounds * medians));
  }

  double time_spent = 0;
  auto signal = [&](double t, int round) -> std::pair<double, double> {
    (void)round;
    double x = rfe_signal(oracle, target, jstar, t, false, medians, static_cast<int>(batch),
                          cfg.reshape, spam, rng, cancel, phase);
    double y = rfe_signal(oracle, target, jstar, t, true, medians, static_cast<int>(batch),
                          cfg.reshape, spam, rng, cancel, phase);
    time_spent += 2.0 * medians * batch * t;
    return {x, y};
  };

  std::function<double(double)> snap;
  if (oracle.mode() == OracleMode::FixedStep) {
    double step = oracle.step();
    snap = [step](double t) { return std::max<double>(1, std::round(t / step)) * step; };
  }

  RfeIntervalResult refined = rfe_refine_interval(signal, eps, cfg.theta_bound, snap);

  CoefficientEstimate est;
  est.pauli = target;
  est.mu_hat = (refined.a + refined.b) / 4.0;  // theta_hat / 2 with theta_hat = (a+b)/2
  est.eps_target = eps;
  est.stderr_final = (refined.b - refined.a) / 4.0;
  est.evolution_time_spent = time_spent;
  est.jstar = jstar;
  est.rounds = std::move(refined.rounds);
  return est;
}

std::vector<CoefficientEstimate> learn_coefficients(EvolutionOracle& oracle,
                                                    const SupportSet& candidates, double eps,
                                                    double mu_m, const RfeConfig& cfg,
                                                    const SpamModel& spam, RandomStream& rng,
                                                    const SparseHamiltonian* cancel,
                                                    const std::string& phase, int threads) {
  std::vector<PauliString> order;
  order.reserve(candidates.counts.size());
  for (const auto& [p, c] : candidates.counts) order.push_back(p);

  std::vector<CoefficientEstimate> out(order.size());
  if (order.empty()) return out;

  auto run_one = [&](size_t i, EvolutionOracle& orc) {
    RandomStream sub = rng.fork(static_cast<uint64_t>(i) ^ 0x636f656666ULL);
    out[i] = robust_frequency_estimate(orc, order[i], eps, cfg, spam, sub, cancel, phase);
    out[i].accepted = std::abs(out[i].mu_hat) >= mu_m / 2.0;
  };

  threads = std::max(1, threads);
  if (threads == 1 || order.size() == 1) {
    for (size_t i = 0; i < order.size(); ++i) run_one(i, oracle);
    return out;
  }

  // Candidates are independent: run on oracle clones with private ledgers,
  // then merge the shards in candidate order so results and accounting are
  // identical to the sequential run.
  std::vector<EvolutionOracle> clones;
  clones.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i) clones.push_back(oracle.clone_for_worker());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= order.size()) return;
      run_one(i, clones[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<int>(threads, static_cast<int>(order.size())); ++w)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& clone : clones) oracle.ledger().merge(clone.ledger());
  return out;
}

}  // namespace hamlearn
