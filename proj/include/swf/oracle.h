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

#ifndef SWF_ORACLE_H_
#define SWF_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swf/model.h"

namespace swf {

// O1: maximize E[sum f_i(a_i, X_i)]. O2: maximize sum f_i(a_i, E[X_i]).
enum class Objective { kO1, kO2 };

std::string ToString(Objective objective);

// Two arm values closer than this (relative to max(1, |r*|)) count as tied.
inline constexpr double kOptimalityTolerance = 1e-12;

// Exhaustive solution of one objective over F.
struct ObjectiveSolution {
  Objective objective = Objective::kO1;
  std::vector<double> values;          // per arm
  double optimum = 0.0;                // R* for O1, r* for O2
  std::vector<ArmIndex> optimal_arms;  // O*, ascending
  std::vector<char> is_optimal;        // per arm
  // Smallest and largest gap to the optimum among non-optimal arms.
  // Undefined when every arm is optimal.
  bool gaps_defined = false;
  double gap_min = 0.0;
  double gap_max = 0.0;
  std::vector<std::string> warnings;

  bool IsOptimal(ArmIndex arm) const { return is_optimal[arm] != 0; }
  // optimum - values[arm]
  double Gap(ArmIndex arm) const { return optimum - values[arm]; }
};

// Argmax bookkeeping shared by both objectives: optimal set, gaps, and a
// warning when every arm ties at zero.
ObjectiveSolution SolveFromValues(Objective objective,
                                  std::vector<double> values);

struct GapProfile {
  ObjectiveSolution o1;
  ObjectiveSolution o2;
  PowerMw a_max = 0;
  std::size_t num_channels = 0;
  std::size_t max_support = 0;  // L
  std::optional<double> b_min;
  std::string b_min_error;  // set when b_min is absent
};

// Solves f(x) = target for x >= 0 with f continuous and increasing and
// f(0) = 0. Brackets by doubling from x = 1, then bisects to `tolerance`.
// Throws std::domain_error when no bracket is found below 2^200.
double SolveIncreasing(const std::function<double(double)>& f, double target,
                       double tolerance = 1e-12);

// Genie-side computations for one scenario: exact per-(channel, level)
// expectations E[Y_{i,a}] and means theta_i, then arm values by summation.
class Oracle {
 public:
  Oracle(const Scenario& scenario, const FeasibleSet& feasible);

  double O1Value(ArmIndex arm) const;
  double O2Value(ArmIndex arm) const;
  double O1Value(const PowerAllocation& allocation) const;
  double O2Value(const PowerAllocation& allocation) const;

  ObjectiveSolution Solve(Objective objective) const;

  // B_i(a) with f_i(a, B_i(a)) = target, per lifted variable (NaN for
  // variables no arm uses). Closed form where the rate function has one,
  // bisection otherwise or when forced.
  std::vector<double> LevelThresholds(double target,
                                      bool force_bisection = false) const;

  // B_min = min over F of min over A_a of B_i(a_i), at target
  // delta_min / (2 L).
  double ComputeBMin(double delta_min, std::size_t exploration_l,
                     bool force_bisection = false) const;

  // Both objectives plus a_max, L and B_min. L defaults to max |A_a|.
  GapProfile Profile(std::optional<std::size_t> exploration_l = {}) const;

  // E[Y_{i,a}] and f_i(a, theta_i) per lifted variable.
  const std::vector<double>& expected_rates() const { return expected_rates_; }
  const std::vector<double>& pseudo_rates() const { return pseudo_rates_; }
  const std::vector<double>& means() const { return means_; }

 private:
  const Scenario& scenario_;
  const FeasibleSet& feasible_;
  std::vector<double> means_;
  std::vector<double> expected_rates_;
  std::vector<double> pseudo_rates_;
};

// [4 a_max^2 L^2 (L+1) N ln n / delta_min^2 + N + (pi^2/3) L N] delta_max
// Upper bound on the expected regret of CWF1 after n rounds.
double Cwf1RegretBound(double a_max, std::size_t max_support,
                       std::size_t num_channels, double delta_min,
                       double delta_max, std::uint64_t n);
double Cwf1RegretBound(const GapProfile& profile, std::size_t num_channels,
                       std::size_t max_support, std::uint64_t n);

// Upper bound on E[T_non(n)] for CWF2:
// N (L+1) ln n / B_min^2 + N + (pi^2/3) L N
double Cwf2NonOptimalPlayBound(double b_min, std::size_t max_support,
                               std::size_t num_channels, std::uint64_t n);
double Cwf2NonOptimalPlayBound(const GapProfile& profile,
                               std::size_t num_channels,
                               std::size_t max_support, std::uint64_t n);

// Cwf2NonOptimalPlayBound * delta_max (O1 gaps): the CWF2 regret bound that
// applies when PseudoRateIdentifiesOptimum holds.
double Cwf2RegretBound(const GapProfile& profile, std::size_t num_channels,
                       std::size_t max_support, std::uint64_t n);

// True iff some O1-optimal arm has strictly larger O2 value than every arm
// outside the O1-optimal set.
// Under this condition an O2 learner also solves O1.
bool PseudoRateIdentifiesOptimum(const ObjectiveSolution& o1,
                                 const ObjectiveSolution& o2);

}  // namespace swf

#endif  // SWF_ORACLE_H_
