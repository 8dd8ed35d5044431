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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamlearn/dense.hpp"
#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/ledger.hpp"
#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"
#include "hamlearn/spam.hpp"
#include "hamlearn/state.hpp"

namespace hamlearn {

enum class OracleMode { ContinuousTime, FixedStep };

/// One record of the ancilla-free twirl experiment: six-state product input
/// (axis + eigenvalue sign per qubit), per-qubit measurement axis, and the
/// measured bits (bit 0 = +1 outcome, bit 1 = -1 outcome).
struct TwirlSample {
  std::vector<uint8_t> input_axes;  // 0=x, 1=y, 2=z
  std::vector<int8_t> input_signs;  // +1 / -1
  std::vector<uint8_t> meas_axes;   // 0=x, 1=y, 2=z
  std::vector<uint8_t> outcomes;    // n bits
};

/// Black-box forward evolution under a hidden sparse Pauli Hamiltonian.
///
/// The hidden operator is never exposed; learners interact through forward
/// queries and through the experiment runners below, each of which charges
/// its evolution time to the ledger, one entry per shot. In fixed-step mode
/// only durations within 1e-12 of an integer multiple of the step are
/// accepted.
///
/// The runners reproduce the per-shot outcome distributions of the physical
/// circuits exactly. A shot's circuit is either deterministic (Bell sampling)
/// or freshly randomized per shot (twirls), so its outcome distribution can
/// be computed once and sampled independently per shot; the honest per-state
/// operations in this header are cross-checked against the runners in tests.
class EvolutionOracle {
 public:
  EvolutionOracle(SparseHamiltonian hidden, OracleMode mode = OracleMode::ContinuousTime,
                  double step = 0.0);

  int num_qubits() const { return hidden_.num_qubits(); }
  OracleMode mode() const { return mode_; }
  double step() const { return step_; }

  TimeLedger& ledger() { return ledger_; }
  const TimeLedger& ledger() const { return ledger_; }

  /// Copy with a fresh ledger; concurrent workers run on clones and their
  /// ledger shards merge back in a deterministic order.
  EvolutionOracle clone_for_worker() const {
    EvolutionOracle c = *this;
    c.ledger_ = TimeLedger();
    return c;
  }

  /// Forward query: applies e^{-iHt} to the low n qubits (ancillas idle).
  void evolve(QuantumState& state, double t, const std::string& phase = "oracle");

  /// Throws on t < 0 or a fixed-step granularity violation.
  void check_duration(double t) const;

  /// Bell-sampling experiment, `shots` repetitions of: prepare n Bell pairs,
  /// run the Trotterized cancellation of hat_h over total time tau in r1
  /// steps, measure in the Bell basis. Returns the decoded Pauli label per
  /// shot (identity included).
  std::vector<PauliString> run_bell_shots(const SparseHamiltonian& hat_h, double tau,
                                          long long r1, long long shots, const SpamModel& spam,
                                          RandomStream& rng, const std::string& phase);

  /// Frequency-estimation experiment shots: product eigenstate of `target`
  /// with the sensitive qubit `jstar`, commutant-twirled evolution for time t
  /// in r2 segments (each segment optionally cancels `cancel`), then readout
  /// of qubit jstar in the Q+ (minus_obs=false) or Q- basis. Returns +-1.
  std::vector<int> run_rfe_shots(const PauliString& target, int jstar, bool minus_obs, double t,
                                 long long r2, long long shots, const SparseHamiltonian* cancel,
                                 const SpamModel& spam, RandomStream& rng,
                                 const std::string& phase);

  /// Single-copy twirl experiment shots (random Pauli frame, six-state inputs,
  /// random-axis readout) of the cancelled evolution over tau in r1 steps.
  std::vector<TwirlSample> run_twirl_shots(const SparseHamiltonian& hat_h, double tau,
                                           long long r1, long long shots, const SpamModel& spam,
                                           RandomStream& rng, const std::string& phase);

  /// Expected value of the Q+- observable for one rfe shot (exact, no noise
  /// beyond SPAM rates); exposed for tests and diagnostics.
  double rfe_expectation(const PauliString& target, int jstar, bool minus_obs, double t,
                         long long r2, const SparseHamiltonian* cancel,
                         const SpamModel& spam) const;

  /// Outcome distribution of the Bell experiment (index = z_bits * 2^n + x_bits).
  std::vector<double> bell_distribution(const SparseHamiltonian& hat_h, double tau, long long r1,
                                        const PauliString& prep_pattern) const;

 private:
  Matrix composite_unitary(const SparseHamiltonian& hat_h, double tau, long long r1) const;
  Matrix segment_unitary(const SparseHamiltonian* cancel, double tau_seg) const;

  SparseHamiltonian hidden_;
  OracleMode mode_;
  double step_;
  TimeLedger ledger_;
};

/// Honest per-state Trotterized cancellation: applies
/// (e^{-iH t/r} e^{+i hat_h t/r})^r, charging t/r per black-box factor.
/// Approximates e^{-i(H - hat_h)t}.
void evolve_trotter_cancel(QuantumState& state, EvolutionOracle& oracle,
                           const SparseHamiltonian& hat_h, double t, long long r,
                           const std::string& phase = "oracle");

}  // namespace hamlearn
