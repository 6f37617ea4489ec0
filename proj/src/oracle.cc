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

#include "swf/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace swf {

std::string ToString(Objective objective) {
  return objective == Objective::kO1 ? "o1" : "o2";
}

ObjectiveSolution SolveFromValues(Objective objective,
                                  std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("no arms to solve over");
  ObjectiveSolution solution;
  solution.objective = objective;
  solution.values = std::move(values);
  solution.optimum =
      *std::max_element(solution.values.begin(), solution.values.end());
  const double tolerance =
      kOptimalityTolerance * std::max(1.0, std::abs(solution.optimum));
  solution.is_optimal.assign(solution.values.size(), 0);
  bool all_zero = true;
  for (ArmIndex k = 0; k < solution.values.size(); ++k) {
    const double value = solution.values[k];
    if (value != 0.0) all_zero = false;
    if (value >= solution.optimum - tolerance) {
      solution.is_optimal[k] = 1;
      solution.optimal_arms.push_back(k);
      continue;
    }
    const double gap = solution.optimum - value;
    if (!solution.gaps_defined) {
      solution.gap_min = solution.gap_max = gap;
      solution.gaps_defined = true;
    } else {
      solution.gap_min = std::min(solution.gap_min, gap);
      solution.gap_max = std::max(solution.gap_max, gap);
    }
  }
  if (all_zero) {
    solution.warnings.push_back(
        "degenerate scenario: every arm has value zero");
  }
  if (!solution.gaps_defined) {
    solution.warnings.push_back("every arm is optimal; gaps are undefined");
  }
  return solution;
}

double SolveIncreasing(const std::function<double(double)>& f, double target,
                       double tolerance) {
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0x1.0p200) {
      throw std::domain_error("no x >= 0 reaches the target rate");
    }
  }
  for (int iteration = 0; iteration < 2000 && hi - lo > tolerance;
       ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Oracle::Oracle(const Scenario& scenario, const FeasibleSet& feasible)
    : scenario_(scenario), feasible_(feasible) {
  if (feasible.num_channels() != scenario.num_channels()) {
    throw std::invalid_argument("feasible set and scenario disagree on N");
  }
  for (const auto& law : scenario.laws()) means_.push_back(law.Mean());
  expected_rates_.resize(feasible.num_variables());
  pseudo_rates_.resize(feasible.num_variables());
  for (std::size_t v = 0; v < feasible.num_variables(); ++v) {
    const std::size_t channel = feasible.variable_channel(v);
    const PowerMw power = feasible.variable_power(v);
    expected_rates_[v] =
        scenario.laws()[channel].ExpectedRate(scenario.rate(), channel, power);
    pseudo_rates_[v] =
        scenario.rate().Evaluate(channel, power, means_[channel]);
  }
}

double Oracle::O1Value(ArmIndex arm) const {
  return feasible_.Score(arm, expected_rates_);
}

double Oracle::O2Value(ArmIndex arm) const {
  return feasible_.Score(arm, pseudo_rates_);
}

double Oracle::O1Value(const PowerAllocation& allocation) const {
  double value = 0.0;
  for (const std::size_t i : allocation.Support()) {
    value += scenario_.laws()[i].ExpectedRate(scenario_.rate(), i,
                                              allocation.levels[i]);
  }
  return value;
}

double Oracle::O2Value(const PowerAllocation& allocation) const {
  double value = 0.0;
  for (const std::size_t i : allocation.Support()) {
    value += scenario_.rate().Evaluate(i, allocation.levels[i], means_[i]);
  }
  return value;
}

ObjectiveSolution Oracle::Solve(Objective objective) const {
  std::vector<double> values(feasible_.size());
  for (ArmIndex k = 0; k < feasible_.size(); ++k) {
    values[k] = objective == Objective::kO1 ? O1Value(k) : O2Value(k);
  }
  return SolveFromValues(objective, std::move(values));
}

std::vector<double> Oracle::LevelThresholds(double target,
                                            bool force_bisection) const {
  std::vector<double> thresholds(feasible_.num_variables(),
                                 std::numeric_limits<double>::quiet_NaN());
  const RateFunction& rate = scenario_.rate();
  for (std::size_t v = 0; v < feasible_.num_variables(); ++v) {
    if (!feasible_.variable_used(v)) continue;
    const std::size_t channel = feasible_.variable_channel(v);
    const PowerMw power = feasible_.variable_power(v);
    std::optional<double> closed;
    if (!force_bisection)
      closed = rate.ClosedFormInverse(channel, power, target);
    if (closed) {
      thresholds[v] = *closed;
      continue;
    }
    try {
      thresholds[v] = SolveIncreasing(
          [&](double x) { return rate.Evaluate(channel, power, x); }, target);
    } catch (const std::domain_error&) {
      throw std::domain_error("rate of channel " + std::to_string(channel) +
                              " at " + std::to_string(power) +
                              " mW never reaches " + std::to_string(target));
    }
  }
  return thresholds;
}

double Oracle::ComputeBMin(double delta_min, std::size_t exploration_l,
                           bool force_bisection) const {
  if (!(delta_min > 0.0)) {
    throw std::invalid_argument("B_min needs a positive delta_min");
  }
  if (exploration_l == 0) throw std::invalid_argument("L must be positive");
  const double target = delta_min / (2.0 * static_cast<double>(exploration_l));
  const std::vector<double> thresholds =
      LevelThresholds(target, force_bisection);
  double b_min = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < thresholds.size(); ++v) {
    if (feasible_.variable_used(v)) b_min = std::min(b_min, thresholds[v]);
  }
  if (!std::isfinite(b_min)) {
    throw std::domain_error("no arm has a nonempty support");
  }
  return b_min;
}

GapProfile Oracle::Profile(std::optional<std::size_t> exploration_l) const {
  GapProfile profile;
  profile.o1 = Solve(Objective::kO1);
  profile.o2 = Solve(Objective::kO2);
  profile.a_max = feasible_.a_max();
  profile.num_channels = scenario_.num_channels();
  profile.max_support = exploration_l.value_or(feasible_.max_support());
  if (!profile.o2.gaps_defined) {
    profile.b_min_error = "delta_min for O2 is undefined (every arm optimal)";
    return profile;
  }
  try {
    profile.b_min = ComputeBMin(profile.o2.gap_min, profile.max_support);
  } catch (const std::exception& e) {
    profile.b_min_error = e.what();
  }
  return profile;
}

namespace {

double LogTerm(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounds need n >= 1");
  return std::log(static_cast<double>(n));
}

double RemainderTerm(std::size_t max_support, std::size_t num_channels) {
  const double l = static_cast<double>(max_support);
  const double n = static_cast<double>(num_channels);
  return n + std::numbers::pi * std::numbers::pi / 3.0 * l * n;
}

}  // namespace

double Cwf1RegretBound(double a_max, std::size_t max_support,
                       std::size_t num_channels, double delta_min,
                       double delta_max, std::uint64_t n) {
  if (!(delta_min > 0.0)) {
    throw std::invalid_argument("CWF1 bound needs delta_min > 0");
  }
  const double l = static_cast<double>(max_support);
  const double channels = static_cast<double>(num_channels);
  const double log_term = 4.0 * a_max * a_max * l * l * (l + 1.0) * channels *
                          LogTerm(n) / (delta_min * delta_min);
  return (log_term + RemainderTerm(max_support, num_channels)) * delta_max;
}

double Cwf1RegretBound(const GapProfile& profile, std::size_t num_channels,
                       std::size_t max_support, std::uint64_t n) {
  if (!profile.o1.gaps_defined) {
    throw std::invalid_argument("CWF1 bound: O1 gaps are undefined");
  }
  return Cwf1RegretBound(static_cast<double>(profile.a_max), max_support,
                         num_channels, profile.o1.gap_min, profile.o1.gap_max,
                         n);
}

double Cwf2NonOptimalPlayBound(double b_min, std::size_t max_support,
                               std::size_t num_channels, std::uint64_t n) {
  if (!(b_min > 0.0)) {
    throw std::invalid_argument("CWF2 bound needs B_min > 0");
  }
  const double l = static_cast<double>(max_support);
  const double channels = static_cast<double>(num_channels);
  return channels * (l + 1.0) * LogTerm(n) / (b_min * b_min) +
         RemainderTerm(max_support, num_channels);
}

double Cwf2NonOptimalPlayBound(const GapProfile& profile,
                               std::size_t num_channels,
                               std::size_t max_support, std::uint64_t n) {
  if (!profile.b_min) {
    throw std::invalid_argument("CWF2 bound: B_min unavailable: " +
                                profile.b_min_error);
  }
  return Cwf2NonOptimalPlayBound(*profile.b_min, max_support, num_channels, n);
}

double Cwf2RegretBound(const GapProfile& profile, std::size_t num_channels,
                       std::size_t max_support, std::uint64_t n) {
  if (!profile.o1.gaps_defined) {
    throw std::invalid_argument("CWF2 regret bound: O1 gaps are undefined");
  }
  return Cwf2NonOptimalPlayBound(profile, num_channels, max_support, n) *
         profile.o1.gap_max;
}

bool PseudoRateIdentifiesOptimum(const ObjectiveSolution& o1,
                                 const ObjectiveSolution& o2) {
  if (o1.values.size() != o2.values.size()) {
    throw std::invalid_argument("solutions cover different feasible sets");
  }
  for (const ArmIndex star : o1.optimal_arms) {
    bool dominates = true;
    for (ArmIndex k = 0; k < o2.values.size() && dominates; ++k) {
      if (o1.IsOptimal(k)) continue;
      dominates = o2.values[star] > o2.values[k];
    }
    if (dominates) return true;
  }
  return false;
}

}  // namespace swf
