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
#include <stdexcept>
#include <string>
#include <vector>

namespace hamlearn {

/// Total-evolution-time ledger. Every black-box query of duration t adds t,
/// tagged with an experiment-phase label, so the total decomposes as
/// sum over phases of (repetition count x per-experiment time).
///
/// The call log is run-length encoded (consecutive equal charges coalesce)
/// and replaying it re-adds durations in the original order, reproducing the
/// stored total bit-for-bit.
class TimeLedger {
 public:
  struct PhaseTotals {
    long long count = 0;
    double time = 0.0;
  };

  struct CallRun {
    std::string phase;
    double t = 0.0;
    long long count = 0;
  };

  void charge(const std::string& phase, double t, long long count = 1) {
    if (t < 0) throw std::invalid_argument("TimeLedger: negative duration");
    if (count <= 0) return;
    for (long long i = 0; i < count; ++i) total_ += t;
    auto& ph = phases_[phase];
    for (long long i = 0; i < count; ++i) ph.time += t;
    ph.count += count;
    if (!log_.empty() && log_.back().phase == phase && log_.back().t == t) {
      log_.back().count += count;
    } else {
      log_.push_back({phase, t, count});
    }
  }

  double total() const { return total_; }
  const std::map<std::string, PhaseTotals>& phases() const { return phases_; }
  const std::vector<CallRun>& call_log() const { return log_; }

  /// Appends another ledger's log (deterministic shard merge).
  void merge(const TimeLedger& shard) {
    for (const auto& run : shard.log_) charge(run.phase, run.t, run.count);
  }

  /// Re-sums the call log in order; equals total() exactly.
  double replay() const { return replay(log_); }

  static double replay(const std::vector<CallRun>& log) {
    double sum = 0.0;
    for (const auto& run : log)
      for (long long i = 0; i < run.count; ++i) sum += run.t;
    return sum;
  }

 private:
  double total_ = 0.0;
  std::map<std::string, PhaseTotals> phases_;
  std::vector<CallRun> log_;
};

}  // namespace hamlearn
