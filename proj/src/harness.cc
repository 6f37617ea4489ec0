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

#include "swf/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "swf/channels.h"
#include "swf/random.h"

namespace swf {
namespace {

// Neumaier compensated sum; keeps the per-round regret total within a few
// ulps of the count-weighted total over 10^6+ rounds.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void ValidateSchedule(const RunConfig& config) {
  if (config.num_runs == 0)
    throw std::invalid_argument("num_runs must be >= 1");
  std::uint64_t previous = 1;
  for (const std::uint64_t n : config.checkpoints) {
    if (n <= previous) {
      throw std::invalid_argument(
          "checkpoints must be strictly increasing and >= 2");
    }
    if (n > config.horizon) {
      throw std::invalid_argument("checkpoint beyond the horizon");
    }
    previous = n;
  }
}

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanStderr Moments(const std::vector<double>& xs) {
  MeanStderr out;
  const double k = static_cast<double>(xs.size());
  for (const double x : xs) out.mean += x;
  out.mean /= k;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (k - 1.0) / k);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> DefaultCheckpoints(std::uint64_t horizon) {
  std::vector<std::uint64_t> points;
  for (std::uint64_t p = 2; p <= horizon; p *= 2) {
    points.push_back(p);
    if (p > horizon / 2) break;
  }
  for (std::uint64_t p = 10; p <= horizon; p *= 10) {
    points.push_back(p);
    if (p > horizon / 10) break;
  }
  if (horizon >= 2) points.push_back(horizon);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

RunTrace RunPolicy(const Scenario& scenario, const FeasibleSet& feasible,
                   const GapProfile& profile, Policy& policy,
                   const RunConfig& config, std::size_t run_index) {
  ValidateSchedule(config);
  const auto& init = policy.initialization();
  if (config.horizon < init.size()) {
    throw std::invalid_argument("horizon " + std::to_string(config.horizon) +
                                " is shorter than the initialization of " +
                                ToString(policy.kind()) + " (" +
                                std::to_string(init.size()) + " rounds)");
  }
  const ObjectiveSolution& target =
      config.objective == Objective::kO1 ? profile.o1 : profile.o2;
  const ObjectiveSolution& regret_basis = profile.o1;
  if (target.values.size() != feasible.size() ||
      regret_basis.values.size() != feasible.size()) {
    throw std::invalid_argument("gap profile does not match the feasible set");
  }

  const std::size_t n_channels = scenario.num_channels();
  RandomStream rng(config.master_seed, run_index);
  std::vector<double> gains(n_channels);
  std::vector<Observation> feedback;
  feedback.reserve(n_channels);

  RunTrace trace;
  trace.run_index = run_index;
  trace.arm_plays.assign(feasible.size(), 0);
  std::vector<std::uint64_t> observations(n_channels, 0);
  std::vector<std::uint64_t> t_tilde(n_channels, 0);
  std::uint64_t t_tilde_unassigned = 0;
  std::uint64_t t_non = 0;
  CompensatedSum regret;
  std::size_t next_checkpoint = 0;

  for (std::uint64_t n = 1; n <= config.horizon; ++n) {
    const ArmIndex arm = n <= init.size() ? init[n - 1] : policy.Select(n);
    SampleGainsInto(scenario.laws(), rng, gains);
    const auto support = feasible.channels(arm);
    feedback.clear();
    for (const std::uint32_t i : support) feedback.push_back({i, gains[i]});
    policy.Update(arm, feedback);

    ++trace.arm_plays[arm];
    regret.Add(regret_basis.Gap(arm));
    if (!target.IsOptimal(arm)) {
      ++t_non;
      if (support.empty()) {
        ++t_tilde_unassigned;
      } else {
        std::uint32_t charged = support[0];
        for (const std::uint32_t i : support) {
          if (observations[i] < observations[charged]) charged = i;
        }
        ++t_tilde[charged];
      }
    }
    for (const std::uint32_t i : support) ++observations[i];

    if (next_checkpoint < config.checkpoints.size() &&
        config.checkpoints[next_checkpoint] == n) {
      CheckpointRecord record;
      record.n = n;
      record.regret = regret.value();
      CompensatedSum by_counts;
      for (ArmIndex k = 0; k < feasible.size(); ++k) {
        if (trace.arm_plays[k] != 0 && !regret_basis.IsOptimal(k)) {
          by_counts.Add(static_cast<double>(trace.arm_plays[k]) *
                        regret_basis.Gap(k));
        }
      }
      record.regret_from_counts = by_counts.value();
      record.t_non = t_non;
      record.t_tilde = t_tilde;
      record.t_tilde_unassigned = t_tilde_unassigned;
      record.observations = observations;
      trace.checkpoints.push_back(std::move(record));
      ++next_checkpoint;
    }
  }
  trace.final_state = policy.Summary();
  return trace;
}

RunTrace Run(const Scenario& scenario, const FeasibleSet& feasible,
             const GapProfile& profile, PolicyKind kind,
             const PolicyOptions& options, const RunConfig& config,
             std::size_t run_index) {
  const auto policy = MakePolicy(kind, scenario, feasible, options);
  return RunPolicy(scenario, feasible, profile, *policy, config, run_index);
}

std::vector<RunTrace> RunAll(const Scenario& scenario,
                             const FeasibleSet& feasible,
                             const GapProfile& profile, PolicyKind kind,
                             const PolicyOptions& options,
                             const RunConfig& config, unsigned threads) {
  ValidateSchedule(config);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads =
      static_cast<unsigned>(std::min<std::size_t>(threads, config.num_runs));

  std::vector<RunTrace> traces(config.num_runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const std::size_t r = next.fetch_add(1);
      if (r >= config.num_runs) return;
      try {
        traces[r] = Run(scenario, feasible, profile, kind, options, config, r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.num_runs;
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

Summary Aggregate(const std::vector<RunTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("no traces to aggregate");
  const auto& schedule = traces.front().checkpoints;
  for (const RunTrace& trace : traces) {
    bool same = trace.checkpoints.size() == schedule.size();
    for (std::size_t c = 0; same && c < schedule.size(); ++c) {
      same = trace.checkpoints[c].n == schedule[c].n;
    }
    if (!same) {
      throw std::invalid_argument(
          "traces have mismatched checkpoint schedules");
    }
  }
  Summary summary;
  std::vector<double> regret(traces.size());
  std::vector<double> regret_log(traces.size());
  std::vector<double> t_non(traces.size());
  std::vector<double> t_non_log(traces.size());
  for (std::size_t c = 0; c < schedule.size(); ++c) {
    const double log_n = std::log(static_cast<double>(schedule[c].n));
    for (std::size_t r = 0; r < traces.size(); ++r) {
      const CheckpointRecord& record = traces[r].checkpoints[c];
      regret[r] = record.regret;
      regret_log[r] = record.regret / log_n;
      t_non[r] = static_cast<double>(record.t_non);
      t_non_log[r] = t_non[r] / log_n;
    }
    SummaryRow row;
    row.n = schedule[c].n;
    row.runs = traces.size();
    const auto regret_moments = Moments(regret);
    const auto regret_log_moments = Moments(regret_log);
    const auto t_non_moments = Moments(t_non);
    const auto t_non_log_moments = Moments(t_non_log);
    row.regret_mean = regret_moments.mean;
    row.regret_stderr = regret_moments.stderr_;
    row.regret_per_log_n_mean = regret_log_moments.mean;
    row.regret_per_log_n_stderr = regret_log_moments.stderr_;
    row.t_non_mean = t_non_moments.mean;
    row.t_non_stderr = t_non_moments.stderr_;
    row.t_non_per_log_n_mean = t_non_log_moments.mean;
    row.t_non_per_log_n_stderr = t_non_log_moments.stderr_;
    summary.rows.push_back(row);
  }
  return summary;
}

BoundReport CompareBound(const Summary& summary, BoundMetric metric,
                         const BoundFunction& bound) {
  BoundReport report;
  report.metric = metric;
  for (const SummaryRow& row : summary.rows) {
    BoundRow out;
    out.n = row.n;
    out.empirical =
        metric == BoundMetric::kRegret ? row.regret_mean : row.t_non_mean;
    out.bound = bound(row.n);
    out.ratio = out.bound > 0.0 ? out.empirical / out.bound
                                : (out.empirical > 0.0 ? INFINITY : 0.0);
    out.exceeds = out.empirical > out.bound;
    report.any_exceeded = report.any_exceeded || out.exceeds;
    report.rows.push_back(out);
  }
  return report;
}

std::optional<PolicyBound> BoundForPolicy(PolicyKind kind,
                                          const GapProfile& profile) {
  const std::size_t n = profile.num_channels;
  const std::size_t l = profile.max_support;
  if (kind == PolicyKind::kCwf1 && profile.o1.gaps_defined) {
    return PolicyBound{BoundMetric::kRegret, [profile, n, l](std::uint64_t t) {
                         return Cwf1RegretBound(profile, n, l, t);
                       }};
  }
  if (kind == PolicyKind::kCwf2 && profile.b_min) {
    return PolicyBound{BoundMetric::kNonOptimalPlays,
                       [profile, n, l](std::uint64_t t) {
                         return Cwf2NonOptimalPlayBound(profile, n, l, t);
                       }};
  }
  return std::nullopt;
}

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void WriteTraceCsv(std::ostream& out, const RunTrace& trace,
                   const BoundFunction& bound) {
  out << "run_index,n,regret,regret_per_log_n,t_non,t_non_per_log_n,"
         "bound_value\n";
  for (const CheckpointRecord& record : trace.checkpoints) {
    const double log_n = std::log(static_cast<double>(record.n));
    out << trace.run_index << ',' << record.n << ','
        << FormatDouble(record.regret) << ','
        << FormatDouble(record.regret / log_n) << ',' << record.t_non << ','
        << FormatDouble(static_cast<double>(record.t_non) / log_n) << ',';
    if (bound) out << FormatDouble(bound(record.n));
    out << '\n';
  }
}

void WriteAggregateCsv(std::ostream& out, const Summary& summary,
                       const BoundFunction& bound) {
  out << "n,runs,regret_mean,regret_stderr,regret_per_log_n_mean,"
         "regret_per_log_n_stderr,t_non_mean,t_non_stderr,"
         "t_non_per_log_n_mean,t_non_per_log_n_stderr,bound_value\n";
  for (const SummaryRow& row : summary.rows) {
    out << row.n << ',' << row.runs << ',' << FormatDouble(row.regret_mean)
        << ',' << FormatDouble(row.regret_stderr) << ','
        << FormatDouble(row.regret_per_log_n_mean) << ','
        << FormatDouble(row.regret_per_log_n_stderr) << ','
        << FormatDouble(row.t_non_mean) << ',' << FormatDouble(row.t_non_stderr)
        << ',' << FormatDouble(row.t_non_per_log_n_mean) << ','
        << FormatDouble(row.t_non_per_log_n_stderr) << ',';
    if (bound) out << FormatDouble(bound(row.n));
    out << '\n';
  }
}

void WriteBoundCsv(std::ostream& out, const BoundReport& report) {
  out << "n,metric,empirical,bound,ratio,exceeds\n";
  const char* metric =
      report.metric == BoundMetric::kRegret ? "regret" : "t_non";
  for (const BoundRow& row : report.rows) {
    out << row.n << ',' << metric << ',' << FormatDouble(row.empirical) << ','
        << FormatDouble(row.bound) << ',' << FormatDouble(row.ratio) << ','
        << (row.exceeds ? 1 : 0) << '\n';
  }
}

}  // namespace swf
