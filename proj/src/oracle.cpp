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

#include "hamlearn/oracle.hpp"

#include <cmath>

#include "hamlearn/evolve.hpp"
#include "hamlearn/pm_observable.hpp"

namespace hamlearn {

EvolutionOracle::EvolutionOracle(SparseHamiltonian hidden, OracleMode mode, double step)
    : hidden_(std::move(hidden)), mode_(mode), step_(step) {
  if (mode_ == OracleMode::FixedStep && step_ <= 0)
    throw std::invalid_argument("EvolutionOracle: fixed-step mode needs a positive step");
  if (hidden_.max_abs_coefficient() > 1.0 + 1e-9)
    throw std::invalid_argument(
        "EvolutionOracle: coefficients exceed 1; normalize the Hamiltonian first");
}

void EvolutionOracle::check_duration(double t) const {
  if (t < 0) throw std::invalid_argument("EvolutionOracle: forward-only evolution, t >= 0");
  if (mode_ == OracleMode::FixedStep) {
    double k = std::round(t / step_);
    if (std::abs(t - k * step_) > 1e-12 * std::max(1.0, std::abs(t)))
      throw std::invalid_argument(
          "EvolutionOracle: duration is not an integer multiple of the fixed step");
  }
}

void EvolutionOracle::evolve(QuantumState& state, double t, const std::string& phase) {
  check_duration(t);
  ledger_.charge(phase, t);
  evolve_exact(state, hidden_, t);
}

Matrix EvolutionOracle::segment_unitary(const SparseHamiltonian* cancel, double tau_seg) const {
  Matrix u = dense_unitary(hidden_, tau_seg);
  if (cancel != nullptr && !cancel->empty()) {
    // Segment (e^{-iH tau'} e^{+i hat_H tau'}): the cancellation factor acts first.
    u = u * dense_unitary(*cancel, -tau_seg);
  }
  return u;
}

Matrix EvolutionOracle::composite_unitary(const SparseHamiltonian& hat_h, double tau,
                                          long long r1) const {
  if (r1 < 1) throw std::invalid_argument("composite_unitary: r1 must be >= 1");
  double tau_seg = tau / static_cast<double>(r1);
  if (mode_ == OracleMode::FixedStep) check_duration(tau_seg);
  return matrix_power(segment_unitary(hat_h.empty() ? nullptr : &hat_h, tau_seg), r1);
}

std::vector<double> EvolutionOracle::bell_distribution(const SparseHamiltonian& hat_h, double tau,
                                                       long long r1,
                                                       const PauliString& prep_pattern) const {
  const int n = num_qubits();
  Matrix w = composite_unitary(hat_h, tau, r1);

  if (!prep_pattern.is_identity()) {
    if (prep_pattern.num_qubits() != 2 * n)
      throw std::invalid_argument("bell_distribution: preparation pattern must cover 2n qubits");
    uint64_t mask = (1ULL << n) - 1;
    PauliString sys(n, prep_pattern.x_bits() & mask, prep_pattern.z_bits() & mask);
    PauliString anc(n, (prep_pattern.x_bits() >> n) & mask, (prep_pattern.z_bits() >> n) & mask);
    // (sigma_s x sigma_a)|EPR> = (sigma_s sigma_a^T x I)|EPR>; transposing a
    // Pauli string flips the sign once per Y letter.
    auto [phase, prod] = pauli_mul(sys, anc);
    int y_count = __builtin_popcountll(anc.x_bits() & anc.z_bits());
    cdouble factor = phase.value() * ((y_count & 1) ? -1.0 : 1.0);
    w = factor * matrix_times_pauli(w, prod);
  }

  const uint64_t dim = 1ULL << n;
  std::vector<double> probs(dim * dim, 0.0);
  const double scale = 1.0 / static_cast<double>(dim);
  for (uint64_t z = 0; z < dim; ++z) {
    for (uint64_t x = 0; x < dim; ++x) {
      cdouble amp = trace_pauli_dagger_times(PauliString(n, x, z), w) * scale;
      probs[(z << n) | x] = std::norm(amp);
    }
  }
  return probs;
}

std::vector<PauliString> EvolutionOracle::run_bell_shots(const SparseHamiltonian& hat_h,
                                                         double tau, long long r1,
                                                         long long shots, const SpamModel& spam,
                                                         RandomStream& rng,
                                                         const std::string& phase) {
  if (hat_h.num_qubits() != num_qubits())
    throw std::invalid_argument("run_bell_shots: cancellation Hamiltonian dimension mismatch");
  if (shots < 1) throw std::invalid_argument("run_bell_shots: shot budget must be >= 1");
  check_duration(tau);

  const int n = num_qubits();
  std::map<PauliString, std::vector<double>> dist_cache;
  auto distribution_for = [&](const PauliString& pattern) -> const std::vector<double>& {
    auto it = dist_cache.find(pattern);
    if (it == dist_cache.end())
      it = dist_cache.emplace(pattern, bell_distribution(hat_h, tau, r1, pattern)).first;
    return it->second;
  };

  std::vector<PauliString> outcomes;
  outcomes.reserve(shots);
  PauliString no_flip = PauliString::identity(2 * n);
  for (long long s = 0; s < shots; ++s) {
    ledger_.charge(phase, tau);
    PauliString pattern =
        spam.prep_flip > 0 ? draw_prep_pattern(spam, 2 * n, rng) : no_flip;
    const auto& probs = distribution_for(pattern);
    double u = rng.uniform(), acc = 0.0;
    size_t idx = probs.size() - 1;
    for (size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) {
        idx = i;
        break;
      }
    }
    uint64_t x = idx & ((1ULL << n) - 1), z = idx >> n;
    std::vector<int> bits = pauli_to_bell_outcome(PauliString(n, x, z));
    if (spam.meas_flip > 0) apply_spam(spam, SpamPhase::Meas, bits, rng);
    outcomes.push_back(bell_outcome_to_pauli(bits));
  }
  return outcomes;
}

double EvolutionOracle::rfe_expectation(const PauliString& target, int jstar, bool minus_obs,
                                        double t, long long r2, const SparseHamiltonian* cancel,
                                        const SpamModel& spam) const {
  if (target.num_qubits() != num_qubits())
    throw std::invalid_argument("rfe_expectation: target dimension mismatch");
  if (target.is_identity()) throw std::invalid_argument("rfe_expectation: identity target");
  if (target.letter(jstar) == PauliLetter::I)
    throw std::invalid_argument("rfe_expectation: jstar must sit on the target's support");
  if (r2 < 1) throw std::invalid_argument("rfe_expectation: r2 must be >= 1");
  check_duration(t);

  const int n = num_qubits();
  const double tau_seg = t / static_cast<double>(r2);
  if (mode_ == OracleMode::FixedStep) check_duration(tau_seg);
  Matrix u = segment_unitary(cancel, tau_seg);

  // Observable A0 = sign * single-qubit Pauli flipping the target's
  // eigenstates at jstar; the commutant twirl closes the pair {A0, A0 P_s}.
  PmObservable q = pm_observable(target.letter(jstar), minus_obs);
  PauliString s0 = PauliString::single(n, jstar, q.letter);
  auto [phase1, s1] = pauli_mul(s0, target);
  cdouble scalar0 = q.sign;
  cdouble scalar1 = q.sign * phase1.value();

  const double inv_dim = 1.0 / static_cast<double>(1ULL << n);
  Matrix step(2, 2);
  const PauliString s_basis[2] = {s0, s1};
  const cdouble scalars[2] = {scalar0, scalar1};
  Matrix u_adj = u.adjoint();
  for (int j = 0; j < 2; ++j) {
    Matrix zj = u_adj * pauli_times_matrix(s_basis[j], u);
    for (int i = 0; i < 2; ++i) {
      step(i, j) = std::conj(scalars[i]) * scalars[j] *
                   trace_pauli_dagger_times(s_basis[i], zj) * inv_dim;
    }
  }
  Matrix powered = matrix_power(step, r2);
  cdouble o0 = powered(0, 0), o1 = powered(1, 0);  // dual evolution of A0

  // <A_i rho_0> for the product input (shrunk per qubit by preparation noise).
  double shrink = 1.0 - spam.prep_flip;
  auto rho_overlap = [&](const PauliString& s, cdouble scalar) -> cdouble {
    double prod = 1.0;
    for (int qu = 0; qu < n; ++qu) {
      PauliLetter obs_letter = s.letter(qu);
      if (obs_letter == PauliLetter::I) continue;
      PauliLetter state_axis;
      if (qu == jstar) {
        state_axis = pm_observable(target.letter(jstar), false).letter;  // Q+ direction
      } else if (target.letter(qu) == PauliLetter::I) {
        state_axis = PauliLetter::Z;  // idle qubits prepared in |0>
      } else {
        state_axis = target.letter(qu);
      }
      if (obs_letter != state_axis) return cdouble(0, 0);
      prod *= shrink;
    }
    return scalar * prod;
  };

  cdouble mean = o0 * rho_overlap(s0, scalar0) + o1 * rho_overlap(s1, scalar1);
  if (std::abs(mean.imag()) > 1e-8)
    throw std::runtime_error("rfe_expectation: expectation failed to come out real");
  double value = mean.real() * (1.0 - 2.0 * spam.meas_flip);
  return std::clamp(value, -1.0, 1.0);
}

std::vector<int> EvolutionOracle::run_rfe_shots(const PauliString& target, int jstar,
                                                bool minus_obs, double t, long long r2,
                                                long long shots, const SparseHamiltonian* cancel,
                                                const SpamModel& spam, RandomStream& rng,
                                                const std::string& phase) {
  double mean = rfe_expectation(target, jstar, minus_obs, t, r2, cancel, spam);
  std::vector<int> out;
  out.reserve(shots);
  for (long long s = 0; s < shots; ++s) {
    ledger_.charge(phase, t);
    out.push_back(rng.pm_one(mean));
  }
  return out;
}

std::vector<TwirlSample> EvolutionOracle::run_twirl_shots(const SparseHamiltonian& hat_h,
                                                          double tau, long long r1,
                                                          long long shots, const SpamModel& spam,
                                                          RandomStream& rng,
                                                          const std::string& phase) {
  if (hat_h.num_qubits() != num_qubits())
    throw std::invalid_argument("run_twirl_shots: cancellation Hamiltonian dimension mismatch");
  check_duration(tau);
  const int n = num_qubits();
  const uint64_t dim = 1ULL << n;

  // The random Pauli frame turns the evolution into a Pauli channel whose
  // error rates are the squared Pauli amplitudes of the composite unitary;
  // given the sampled error the readout is classical and per-qubit.
  Matrix w = composite_unitary(hat_h, tau, r1);
  std::vector<double> rates((size_t)dim * dim);
  const double scale = 1.0 / static_cast<double>(dim);
  for (uint64_t z = 0; z < dim; ++z)
    for (uint64_t x = 0; x < dim; ++x)
      rates[(z << n) | x] = std::norm(trace_pauli_dagger_times(PauliString(n, x, z), w) * scale);

  std::vector<TwirlSample> samples;
  samples.reserve(shots);
  for (long long s = 0; s < shots; ++s) {
    ledger_.charge(phase, tau);
    TwirlSample rec;
    rec.input_axes.resize(n);
    rec.input_signs.resize(n);
    rec.meas_axes.resize(n);
    rec.outcomes.resize(n);
    std::vector<bool> depolarized(n, false);
    for (int q = 0; q < n; ++q) {
      rec.input_axes[q] = static_cast<uint8_t>(rng.uniform_u64(3));
      rec.input_signs[q] = rng.bernoulli(0.5) ? 1 : -1;
      rec.meas_axes[q] = static_cast<uint8_t>(rng.uniform_u64(3));
      if (spam.prep_flip > 0 && rng.bernoulli(spam.prep_flip)) depolarized[q] = true;
    }
    // Draw the Pauli error.
    double u = rng.uniform(), acc = 0.0;
    size_t idx = rates.size() - 1;
    for (size_t i = 0; i < rates.size(); ++i) {
      acc += rates[i];
      if (u < acc) {
        idx = i;
        break;
      }
    }
    PauliString err(n, idx & (dim - 1), idx >> n);
    static const PauliLetter axis_letter[3] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    for (int q = 0; q < n; ++q) {
      int pm;
      if (depolarized[q] || rec.meas_axes[q] != rec.input_axes[q]) {
        pm = rng.bernoulli(0.5) ? 1 : -1;
      } else {
        PauliLetter e = err.letter(q);
        bool anti = (e != PauliLetter::I) && (e != axis_letter[rec.meas_axes[q]]);
        pm = rec.input_signs[q] * (anti ? -1 : 1);
      }
      if (spam.meas_flip > 0 && rng.bernoulli(spam.meas_flip)) pm = -pm;
      rec.outcomes[q] = pm > 0 ? 0 : 1;
    }
    samples.push_back(std::move(rec));
  }
  return samples;
}

void evolve_trotter_cancel(QuantumState& state, EvolutionOracle& oracle,
                           const SparseHamiltonian& hat_h, double t, long long r,
                           const std::string& phase) {
  if (r < 1) throw std::invalid_argument("evolve_trotter_cancel: r must be >= 1");
  if (t < 0) throw std::invalid_argument("evolve_trotter_cancel: t must be >= 0");
  double seg = t / static_cast<double>(r);
  SparseHamiltonian neg = hat_h.scaled(-1.0);
  for (long long k = 0; k < r; ++k) {
    if (!neg.empty()) evolve_local(state, neg, seg);  // e^{+i hat_H seg}
    oracle.evolve(state, seg, phase);
  }
}

}  // namespace hamlearn
