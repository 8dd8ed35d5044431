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

#include "hamlearn/hierarchy.hpp"

#include <cmath>

namespace hamlearn {

namespace {

std::string structure_phase(int level) { return "structure[" + std::to_string(level) + "]"; }
std::string coeff_phase(int level) { return "coeff[" + std::to_string(level) + "]"; }

}  // namespace

LearnReport hierarchical_learn(EvolutionOracle& oracle, const HierarchyConfig& cfg) {
  cfg.validate();
  const int levels = cfg.num_levels();
  RandomStream rng(cfg.seed);

  LearnReport report;
  report.seed = cfg.seed;
  report.learned = SparseHamiltonian(oracle.num_qubits());

  for (int j = 0; j < levels; ++j) {
    LevelRecord rec;
    rec.level = j;

    LevelOverride ov;
    if (auto it = cfg.overrides.find(j); it != cfg.overrides.end()) ov = it->second;

    StructureConfig scfg;
    scfg.m_est = cfg.m_est;
    scfg.c = cfg.c_structure;
    scfg.shots = ov.shots_structure > 0 ? ov.shots_structure : cfg.shots_structure;
    scfg.mu_m = ov.mu_m > 0 ? ov.mu_m : std::pow(2.0, -(j + 1));
    if (ov.structure_tau > 0) {
      scfg.tau = ov.structure_tau;
      if (ov.mu_m <= 0) {
        // A schedule override fixes the per-shot time; the matching threshold
        // inverts tau = 1/(C M mu_m).
        scfg.mu_m = std::min(1.0, 1.0 / (cfg.c_structure * cfg.m_est * scfg.tau));
      }
    }
    auto [tau, r1] = choose_tau_r1(scfg);
    rec.mu_m = scfg.mu_m;
    rec.tau = tau;
    rec.r1 = r1;
    rec.eps = ov.eps > 0 ? ov.eps : cfg.eps;
    rec.structure_shots = scfg.shots;

    RandomStream srng = rng.fork(static_cast<uint64_t>(j) * 2 + 1);
    double t0 = oracle.ledger().total();
    if (cfg.route == StructureRoute::TwoCopy) {
      rec.candidates = structure_learn_two_copy(oracle, report.learned, scfg, cfg.spam, srng,
                                                structure_phase(j));
    } else {
      rec.candidates = structure_learn_single_copy(oracle, report.learned, scfg, cfg.spam, srng,
                                                   cfg.delta, structure_phase(j));
    }
    rec.structure_time = oracle.ledger().total() - t0;

    RfeConfig rcfg;
    rcfg.reshape.m_est = cfg.m_est;
    rcfg.reshape.c = cfg.c_r2;
    rcfg.fail_prob = cfg.fail_prob;
    rcfg.medians = cfg.rfe_medians;
    rcfg.batch_size = cfg.rfe_batch;
    rcfg.shot_budget = cfg.shots_coeff;

    RandomStream crng = rng.fork(static_cast<uint64_t>(j) * 2 + 2);
    double t1 = oracle.ledger().total();
    // RFE runs against the residual H - H_hat: the running estimate is
    // cancelled inside every reshaping segment, so accepted estimates are
    // corrections to fold into the stored coefficients.
    rec.estimates = learn_coefficients(oracle, rec.candidates, rec.eps, rec.mu_m, rcfg, cfg.spam,
                                       crng, &report.learned, coeff_phase(j), cfg.threads);
    rec.coeff_time = oracle.ledger().total() - t1;

    for (const auto& est : rec.estimates) {
      if (est.accepted) report.learned.add_term(est.pauli, est.mu_hat);
    }
    report.levels.push_back(std::move(rec));
  }
  report.ledger = oracle.ledger();
  return report;
}

std::vector<LedgerRow> ledger_breakdown(const LearnReport& report) {
  std::vector<LedgerRow> rows;
  const auto& phases = report.ledger.phases();
  for (const auto& level : report.levels) {
    LedgerRow row;
    row.level = level.level;
    if (auto it = phases.find(structure_phase(level.level)); it != phases.end()) {
      row.structure_time = it->second.time;
      row.experiments += it->second.count;
    }
    if (auto it = phases.find(coeff_phase(level.level)); it != phases.end()) {
      row.coeff_time = it->second.time;
      row.experiments += it->second.count;
    }
    rows.push_back(row);
  }
  return rows;
}

double heisenberg_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4)
    throw std::invalid_argument("heisenberg_fit: need at least 4 (eps, time) points");
  double lo = points[0].first, hi = points[0].first;
  for (const auto& [eps, t] : points) {
    if (eps <= 0 || t <= 0) throw std::invalid_argument("heisenberg_fit: positive values only");
    lo = std::min(lo, eps);
    hi = std::max(hi, eps);
  }
  if (hi / lo < 100.0)
    throw std::invalid_argument("heisenberg_fit: eps values must span at least two decades");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(points.size());
  for (const auto& [eps, t] : points) {
    double x = std::log(eps), y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hamlearn
