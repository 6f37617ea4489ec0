// Copyright 2026 The SWF Authors.
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

#ifndef SWF_HARNESS_H_
#define SWF_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swf/model.h"
#include "swf/oracle.h"
#include "swf/policies.h"

namespace swf {

struct RunConfig {
  // Which optimal set T_non is counted against. Regret always uses O1.
  Objective objective = Objective::kO1;
  std::uint64_t horizon = 0;
  std::uint64_t master_seed = 0;
  std::size_t num_runs = 1;
  // Ascending rounds in [2, horizon] at which metrics are recorded.
  std::vector<std::uint64_t> checkpoints;
};

// Powers of two and powers of ten in [2, horizon], plus the horizon.
std::vector<std::uint64_t> DefaultCheckpoints(std::uint64_t horizon);

struct CheckpointRecord {
  std::uint64_t n = 0;
  // Pseudo-regret sum_t (R* - E[R_a(t)]), accumulated round by round.
  double regret = 0.0;
  // The same quantity as sum_a T_a(n) (R* - E[R_a]).
  double regret_from_counts = 0.0;
  std::uint64_t t_non = 0;
  // Per-channel split of T_non: each non-optimal play is charged to the
  // least-observed channel of the played support (smallest index on ties).
  std::vector<std::uint64_t> t_tilde;
  // Non-optimal plays of the empty allocation, which has no channel.
  std::uint64_t t_tilde_unassigned = 0;
  // m_i(n): rounds in which channel i was on the played support.
  std::vector<std::uint64_t> observations;
};

struct RunTrace {
  std::size_t run_index = 0;
  std::vector<CheckpointRecord> checkpoints;
  std::vector<std::uint64_t> arm_plays;  // T_a(horizon)
  std::string final_state;
};

// Runs one policy for config.horizon rounds on stream run_index of
// config.master_seed. Every channel is sampled every round (one uniform
// each), and only the support of the played arm is revealed.
RunTrace RunPolicy(const Scenario& scenario, const FeasibleSet& feasible,
                   const GapProfile& profile, Policy& policy,
                   const RunConfig& config, std::size_t run_index);

RunTrace Run(const Scenario& scenario, const FeasibleSet& feasible,
             const GapProfile& profile, PolicyKind kind,
             const PolicyOptions& options, const RunConfig& config,
             std::size_t run_index);

// config.num_runs independent runs on up to `threads` workers (0 = one per
// hardware thread). Results are ordered by run index.
std::vector<RunTrace> RunAll(const Scenario& scenario,
                             const FeasibleSet& feasible,
                             const GapProfile& profile, PolicyKind kind,
                             const PolicyOptions& options,
                             const RunConfig& config, unsigned threads = 0);

struct SummaryRow {
  std::uint64_t n = 0;
  std::size_t runs = 0;
  double regret_mean = 0.0;
  double regret_stderr = 0.0;
  double regret_per_log_n_mean = 0.0;
  double regret_per_log_n_stderr = 0.0;
  double t_non_mean = 0.0;
  double t_non_stderr = 0.0;
  double t_non_per_log_n_mean = 0.0;
  double t_non_per_log_n_stderr = 0.0;
};

struct Summary {
  std::vector<SummaryRow> rows;
};

// Mean and standard error across traces per checkpoint. Throws when the
// traces do not share one checkpoint schedule.
Summary Aggregate(const std::vector<RunTrace>& traces);

enum class BoundMetric { kRegret, kNonOptimalPlays };

using BoundFunction = std::function<double(std::uint64_t)>;

struct BoundRow {
  std::uint64_t n = 0;
  double empirical = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool exceeds = false;
};

struct BoundReport {
  BoundMetric metric = BoundMetric::kRegret;
  std::vector<BoundRow> rows;
  bool any_exceeded = false;
};

BoundReport CompareBound(const Summary& summary, BoundMetric metric,
                         const BoundFunction& bound);

// The theoretical bound that applies to a policy, if any: the CWF1 regret
// bound, or the CWF2 bound on non-optimal plays.
struct PolicyBound {
  BoundMetric metric = BoundMetric::kRegret;
  BoundFunction bound;
};
std::optional<PolicyBound> BoundForPolicy(PolicyKind kind,
                                          const GapProfile& profile);

// CSV emission. Doubles are written in shortest round-trip form, so the
// bytes depend only on the values.
std::string FormatDouble(double value);
void WriteTraceCsv(std::ostream& out, const RunTrace& trace,
                   const BoundFunction& bound);
void WriteAggregateCsv(std::ostream& out, const Summary& summary,
                       const BoundFunction& bound);
void WriteBoundCsv(std::ostream& out, const BoundReport& report);

}  // namespace swf

#endif  // SWF_HARNESS_H_
