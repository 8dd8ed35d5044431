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

#include "hamlearn/twirl.hpp"

#include <algorithm>
#include <cmath>

namespace hamlearn {

PauliRateVector pauli_error_rates_exact(const SparseHamiltonian& h, double t) {
  const int n = h.num_qubits();
  if (n > 6) throw std::invalid_argument("pauli_error_rates_exact: brute-force oracle is n <= 6");
  Matrix u = dense_unitary(h, t);
  const uint64_t dim = 1ULL << n;
  const double scale = 1.0 / static_cast<double>(dim);
  PauliRateVector out;
  for (uint64_t z = 0; z < dim; ++z) {
    for (uint64_t x = 0; x < dim; ++x) {
      PauliString p(n, x, z);
      double rate = std::norm(trace_pauli_dagger_times(p, u) * scale);
      if (rate > 0) out.rates[p] = rate;
    }
  }
  return out;
}

long long population_recovery_samples(int n, double eps1, double delta) {
  if (!(eps1 > 0 && eps1 < 1) || !(delta > 0 && delta < 1))
    throw std::invalid_argument("population_recovery_samples: eps1, delta in (0, 1)");
  constexpr double kSampleConstant = 16.0;
  double m = kSampleConstant / (eps1 * eps1) * std::log(std::max(2.0, n / (eps1 * delta)));
  return static_cast<long long>(std::ceil(m));
}

namespace {

// Per-qubit estimator kernel g_c for target letter c: with R_w = 9 v o when
// the input and measurement axes both equal w (else 0),
//   g_c = (1 + sum_w s_w(c) R_w) / 4,   s_w(c) = +1 iff c in {I, w}.
// E[prod over a prefix of g] is exactly the prefix mass: summing g_c over the
// four letters gives 1, so suffix qubits integrate out.
struct QubitKernel {
  int matched_axis;  // 0..2 when input axis == meas axis, else -1
  double r;          // 9 * v * o for the matched axis
};

inline double kernel_value(const QubitKernel& k, int letter /*0=I,1=X,2=Y,3=Z*/) {
  if (k.matched_axis < 0) return 0.25;
  static const int axis_of_letter[4] = {-1, 0, 1, 2};  // I has no axis
  int s = (letter == 0 || axis_of_letter[letter] == k.matched_axis) ? 1 : -1;
  return 0.25 * (1.0 + s * k.r);
}

}  // namespace

PauliRateVector population_recover(const std::vector<TwirlSample>& samples, double eps1,
                                   double delta) {
  if (samples.empty()) throw std::invalid_argument("population_recover: no samples");
  const int n = static_cast<int>(samples[0].input_axes.size());
  const long long m = static_cast<long long>(samples.size());
  const long long required = population_recovery_samples(n, eps1, delta);
  if (m < required)
    throw std::invalid_argument("population_recover: insufficient samples, need at least " +
                                std::to_string(required) + " for eps1=" + std::to_string(eps1) +
                                ", delta=" + std::to_string(delta));

  std::vector<std::vector<QubitKernel>> kernels(samples.size());
  for (size_t s = 0; s < samples.size(); ++s) {
    kernels[s].resize(n);
    for (int q = 0; q < n; ++q) {
      const auto& rec = samples[s];
      QubitKernel k{-1, 0.0};
      if (rec.input_axes[q] == rec.meas_axes[q]) {
        k.matched_axis = rec.input_axes[q];
        double o = rec.outcomes[q] == 0 ? 1.0 : -1.0;
        k.r = 9.0 * rec.input_signs[q] * o;
      }
      kernels[s][q] = k;
    }
  }

  const double prune = eps1 / 2.0;
  const size_t max_entries = static_cast<size_t>(std::floor(4.0 / eps1));

  struct Prefix {
    std::vector<int> letters;
    double mass = 0;
  };
  std::vector<Prefix> survivors{{{}, 1.0}};

  for (int depth = 0; depth < n; ++depth) {
    std::vector<Prefix> next;
    for (const auto& parent : survivors) {
      double child_mass[4] = {0, 0, 0, 0};
      for (size_t s = 0; s < samples.size(); ++s) {
        double partial = 1.0;
        for (int q = 0; q < depth; ++q) {
          partial *= kernel_value(kernels[s][q], parent.letters[q]);
          if (partial == 0.0) break;
        }
        if (partial == 0.0) continue;
        for (int c = 0; c < 4; ++c)
          child_mass[c] += partial * kernel_value(kernels[s][depth], c);
      }
      for (int c = 0; c < 4; ++c) {
        double mass = child_mass[c] / static_cast<double>(m);
        if (mass >= prune) {
          Prefix child;
          child.letters = parent.letters;
          child.letters.push_back(c);
          child.mass = mass;
          next.push_back(std::move(child));
        }
      }
    }
    if (next.size() > max_entries) {
      std::sort(next.begin(), next.end(),
                [](const Prefix& a, const Prefix& b) { return a.mass > b.mass; });
      next.resize(max_entries);
    }
    survivors = std::move(next);
    if (survivors.empty()) break;
  }

  PauliRateVector out;
  static const PauliLetter letters[4] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                         PauliLetter::Z};
  for (const auto& pre : survivors) {
    uint64_t x = 0, z = 0;
    for (int q = 0; q < n; ++q) {
      PauliLetter l = letters[pre.letters[q]];
      if (l == PauliLetter::X || l == PauliLetter::Y) x |= 1ULL << q;
      if (l == PauliLetter::Z || l == PauliLetter::Y) z |= 1ULL << q;
    }
    out.rates[PauliString(n, x, z)] = pre.mass;
  }
  return out;
}

SupportSet structure_learn_single_copy(EvolutionOracle& oracle, const SparseHamiltonian& hat_h,
                                       const StructureConfig& cfg, const SpamModel& spam,
                                       RandomStream& rng, double delta,
                                       const std::string& phase) {
  cfg.validate();
  if (hat_h.num_qubits() != oracle.num_qubits())
    throw std::invalid_argument("structure_learn_single_copy: dimension mismatch");
  auto [tau, r1] = choose_tau_r1(cfg);

  // Operational detection floor: a term at the threshold mu_m appears with
  // rate ~ sin^2(mu_m * tau); keep a safety factor for higher orders and
  // noise, then follow the gamma/2 rule for both accuracy and threshold.
  double s = std::sin(cfg.mu_m * tau);
  double gamma = 0.8 * s * s;
  double eps1 = gamma / 2.0;
  long long m = population_recovery_samples(oracle.num_qubits(), eps1, delta);

  auto samples = oracle.run_twirl_shots(hat_h, tau, r1, m, spam, rng, phase);
  PauliRateVector recovered = population_recover(samples, eps1, delta);

  SupportSet support;
  for (const auto& [p, rate] : recovered.rates) {
    if (p.is_identity()) continue;
    if (rate < gamma / 2.0) continue;
    support.counts[p] = std::max<long long>(1, std::llround(rate * static_cast<double>(m)));
  }
  return support;
}

}  // namespace hamlearn
