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

#ifndef SWF_POLICIES_H_
#define SWF_POLICIES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swf/knapsack.h"
#include "swf/model.h"

namespace swf {

// One revealed gain. Feedback for a round lists exactly the channels on
// the played arm's support, in ascending channel order.
struct Observation {
  std::uint32_t channel = 0;
  double gain = 0.0;
};

enum class PolicyKind { kCwf1, kCwf2, kUcb1, kLlr };

std::string ToString(PolicyKind kind);
std::optional<PolicyKind> ParsePolicyKind(std::string_view name);
inline constexpr PolicyKind kAllPolicies[] = {
    PolicyKind::kCwf1, PolicyKind::kCwf2, PolicyKind::kLlr, PolicyKind::kUcb1};

enum class ArgmaxMethod { kExhaustive, kKnapsack };

std::string ToString(ArgmaxMethod method);
std::optional<ArgmaxMethod> ParseArgmaxMethod(std::string_view name);

struct PolicyOptions {
  // Overrides L = max |A_a| in the exploration bonus.
  std::optional<std::size_t> exploration_l;
  ArgmaxMethod argmax = ArgmaxMethod::kExhaustive;
};

// Index of the highest-scoring arm; the smallest index wins ties.
ArmIndex ExhaustiveArgmax(const FeasibleSet& feasible,
                          std::span<const double> variable_values);

// For t = 0..N-1, the first arm (in index order) whose support contains
// channel t. Throws when some channel is never powered.
std::vector<ArmIndex> ChannelCoveringPlays(const FeasibleSet& feasible);

// Greedy set cover of every used (channel, level) variable: repeatedly
// the arm covering the most uncovered variables, smallest index on ties.
std::vector<ArmIndex> VariableCoveringPlays(const FeasibleSet& feasible);

// Throws std::invalid_argument unless the observations are exactly the
// support of `arm` in channel order with gains in [0, 1].
void ValidateFeedback(const FeasibleSet& feasible, ArmIndex arm,
                      std::span<const Observation> feedback);

// sqrt((L + 1) ln n / m); infinite for m == 0.
double ExplorationRadius(std::size_t exploration_l, std::uint64_t round,
                         std::uint64_t count);

// ---------------------------------------------------------------------------
// State of each policy and its index/update rules as free functions.

struct Cwf1State {
  std::vector<double> y_bar;     // per lifted variable
  std::vector<std::uint64_t> m;  // per channel
  std::uint64_t n = 0;
  std::size_t exploration_l = 1;
};

Cwf1State MakeCwf1State(const FeasibleSet& feasible, std::size_t l);
// Per variable: y_bar + sqrt((L+1) ln n / m_i).
void Cwf1Indices(const Cwf1State& state, const FeasibleSet& feasible,
                 std::uint64_t round, std::span<double> out);
ArmIndex Cwf1Select(const Cwf1State& state, const FeasibleSet& feasible,
                    std::uint64_t round);
// Refreshes every level of every observed channel, then bumps m_i.
void Cwf1Update(Cwf1State& state, const RateFunction& rate,
                const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback);

struct Cwf2State {
  std::vector<double> x_bar;     // per channel
  std::vector<std::uint64_t> m;  // per channel
  std::uint64_t n = 0;
  std::size_t exploration_l = 1;
};

Cwf2State MakeCwf2State(const FeasibleSet& feasible, std::size_t l);
// Per variable: f_i(a, x_bar_i) + f_i(a, sqrt((L+1) ln n / m_i)).
void Cwf2Indices(const Cwf2State& state, const RateFunction& rate,
                 const FeasibleSet& feasible, std::uint64_t round,
                 std::span<double> out);
ArmIndex Cwf2Select(const Cwf2State& state, const RateFunction& rate,
                    const FeasibleSet& feasible, std::uint64_t round);
void Cwf2Update(Cwf2State& state, const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback);

struct Ucb1State {
  std::vector<double> mean;      // per arm
  std::vector<std::uint64_t> m;  // per arm
  std::uint64_t n = 0;
};

Ucb1State MakeUcb1State(const FeasibleSet& feasible);
ArmIndex Ucb1Select(const Ucb1State& state, std::uint64_t round);
void Ucb1Update(Ucb1State& state, const RateFunction& rate,
                const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback);

struct LlrState {
  std::vector<double> y_bar;     // per lifted variable
  std::vector<std::uint64_t> m;  // per lifted variable
  std::uint64_t n = 0;
  std::size_t exploration_l = 1;
};

LlrState MakeLlrState(const FeasibleSet& feasible, std::size_t l);
// Per used variable: y_bar + sqrt((L+1) ln n / m_{i,a}); zero elsewhere.
void LlrIndices(const LlrState& state, const FeasibleSet& feasible,
                std::uint64_t round, std::span<double> out);
ArmIndex LlrSelect(const LlrState& state, const FeasibleSet& feasible,
                   std::uint64_t round);
// Only the played level of each observed channel is refreshed.
void LlrUpdate(LlrState& state, const RateFunction& rate,
               const FeasibleSet& feasible, ArmIndex arm,
               std::span<const Observation> feedback);

// ---------------------------------------------------------------------------

// A learning policy behind the select/update protocol. Rounds are numbered
// from 1; rounds 1..initialization().size() play the initialization arms,
// after which Select(n) is consulted. Every round ends with one Update.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual PolicyKind kind() const = 0;
  const std::vector<ArmIndex>& initialization() const {
    return initialization_;
  }
  virtual ArmIndex Select(std::uint64_t round) = 0;
  virtual void Update(ArmIndex arm, std::span<const Observation> feedback) = 0;
  // Stored statistics, not counting the round counter.
  virtual std::size_t StateSize() const = 0;
  virtual std::string Summary() const = 0;

 protected:
  std::vector<ArmIndex> initialization_;
};

class Cwf1Policy : public Policy {
 public:
  Cwf1Policy(const Scenario& scenario, const FeasibleSet& feasible,
             const PolicyOptions& options);

  PolicyKind kind() const override { return PolicyKind::kCwf1; }
  ArmIndex Select(std::uint64_t round) override;
  void Update(ArmIndex arm, std::span<const Observation> feedback) override;
  std::size_t StateSize() const override;
  std::string Summary() const override;

  const Cwf1State& state() const { return state_; }
  Cwf1State& mutable_state() { return state_; }

 private:
  const RateFunction& rate_;
  const FeasibleSet& feasible_;
  Cwf1State state_;
  std::vector<double> indices_;
  std::optional<KnapsackArgmax> knapsack_;
};

class Cwf2Policy : public Policy {
 public:
  Cwf2Policy(const Scenario& scenario, const FeasibleSet& feasible,
             const PolicyOptions& options);

  PolicyKind kind() const override { return PolicyKind::kCwf2; }
  ArmIndex Select(std::uint64_t round) override;
  void Update(ArmIndex arm, std::span<const Observation> feedback) override;
  std::size_t StateSize() const override;
  std::string Summary() const override;

  const Cwf2State& state() const { return state_; }
  Cwf2State& mutable_state() { return state_; }

 private:
  const RateFunction& rate_;
  const FeasibleSet& feasible_;
  Cwf2State state_;
  std::vector<double> indices_;
  std::optional<KnapsackArgmax> knapsack_;
};

class Ucb1Policy : public Policy {
 public:
  Ucb1Policy(const Scenario& scenario, const FeasibleSet& feasible);

  PolicyKind kind() const override { return PolicyKind::kUcb1; }
  ArmIndex Select(std::uint64_t round) override;
  void Update(ArmIndex arm, std::span<const Observation> feedback) override;
  std::size_t StateSize() const override;
  std::string Summary() const override;

  const Ucb1State& state() const { return state_; }
  Ucb1State& mutable_state() { return state_; }

 private:
  const RateFunction& rate_;
  const FeasibleSet& feasible_;
  Ucb1State state_;
};

class LlrPolicy : public Policy {
 public:
  LlrPolicy(const Scenario& scenario, const FeasibleSet& feasible,
            const PolicyOptions& options);

  PolicyKind kind() const override { return PolicyKind::kLlr; }
  ArmIndex Select(std::uint64_t round) override;
  void Update(ArmIndex arm, std::span<const Observation> feedback) override;
  std::size_t StateSize() const override;
  std::string Summary() const override;

  const LlrState& state() const { return state_; }
  LlrState& mutable_state() { return state_; }

 private:
  const RateFunction& rate_;
  const FeasibleSet& feasible_;
  LlrState state_;
  std::vector<double> indices_;
  std::optional<KnapsackArgmax> knapsack_;
};

// The scenario and feasible set must outlive the policy.
std::unique_ptr<Policy> MakePolicy(PolicyKind kind, const Scenario& scenario,
                                   const FeasibleSet& feasible,
                                   const PolicyOptions& options = {});

}  // namespace swf

#endif  // SWF_POLICIES_H_
