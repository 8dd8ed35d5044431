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

#include <optional>

#include "hamlearn/rfe.hpp"
#include "hamlearn/structure.hpp"
#include "hamlearn/twirl.hpp"

namespace hamlearn {

enum class StructureRoute { TwoCopy, SingleCopy };

/// Per-level schedule override (all in the oracle's normalized time units).
struct LevelOverride {
  double structure_tau = 0;  // per-shot structure evolution time; 0 = derive
  double eps = 0;            // coefficient accuracy for the level; 0 = global
  double mu_m = 0;           // threshold; 0 = derive (2^-(j+1) or from tau)
  long long shots_structure = 0;
};

struct HierarchyConfig {
  double eps = 0.01;               // global target accuracy
  int m_est = 1;
  StructureRoute route = StructureRoute::TwoCopy;
  long long shots_structure = 2000;
  long long shots_coeff = 1000;    // RFE budget per candidate (0 = theoretical)
  double c_structure = 4.0;
  double c_r2 = 48.0;
  double fail_prob = 0.01;
  double delta = 0.05;             // failure budget for shot formulas
  SpamModel spam;
  uint64_t seed = 1;
  int levels_cap = 0;              // 0 = ceil(log2(1/eps)) levels
  int rfe_medians = 0;             // 0 = auto
  int rfe_batch = 54;
  int threads = 1;
  std::map<int, LevelOverride> overrides;  // keyed by 0-based level index

  void validate() const {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("HierarchyConfig: eps in (0, 1)");
    if (m_est < 1) throw std::invalid_argument("HierarchyConfig: M_est >= 1");
  }

  int num_levels() const {
    if (levels_cap > 0) return levels_cap;
    return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12)));
  }
};

struct LevelRecord {
  int level = 0;            // 0-based j
  double mu_m = 0;
  double tau = 0;
  long long r1 = 0;
  double eps = 0;
  SupportSet candidates;
  std::vector<CoefficientEstimate> estimates;  // accepted and rejected
  double structure_time = 0;  // T1_j
  double coeff_time = 0;      // T2_j
  long long structure_shots = 0;
};

/// Output of a full hierarchical run: the learned Hamiltonian, per-level
/// provenance (including rejected false positives), and the time ledger.
struct LearnReport {
  SparseHamiltonian learned{1};
  std::vector<LevelRecord> levels;
  TimeLedger ledger;
  uint64_t seed = 0;
  double scale = 1.0;  // physical = scale * normalized
};

/// The ansatz-free driver: per level j set mu_m, run the configured structure
/// route against the residual (cancelling the running estimate), estimate
/// accepted candidates' residual coefficients by RFE, and fold them into the
/// estimate. Levels re-detecting a learned string refine it in place.
LearnReport hierarchical_learn(EvolutionOracle& oracle, const HierarchyConfig& cfg);

struct LedgerRow {
  int level = 0;
  double structure_time = 0;
  double coeff_time = 0;
  long long experiments = 0;
};

/// Per-level (T1_j, T2_j, L_j) rows; the rows plus any unattributed phases
/// re-sum to the ledger total within 1e-9.
std::vector<LedgerRow> ledger_breakdown(const LearnReport& report);

/// Least-squares slope of log(total_time) against log(eps).
double heisenberg_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace hamlearn
