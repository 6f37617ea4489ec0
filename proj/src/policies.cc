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

#include "swf/policies.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swf {
namespace {

std::size_t ResolveL(const FeasibleSet& feasible,
                     const PolicyOptions& options) {
  const std::size_t l = options.exploration_l.value_or(feasible.max_support());
  if (l == 0) throw std::invalid_argument("exploration L must be positive");
  return l;
}

std::optional<KnapsackArgmax> MaybeKnapsack(const Scenario& scenario,
                                            const FeasibleSet& feasible,
                                            const PolicyOptions& options) {
  if (options.argmax != ArgmaxMethod::kKnapsack) return std::nullopt;
  return std::optional<KnapsackArgmax>(std::in_place, feasible,
                                       scenario.total_power());
}

template <typename T>
std::string Join(const std::vector<T>& values) {
  std::ostringstream out;
  out.precision(6);
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << (k ? "," : "") << values[k];
  }
  return out.str();
}

}  // namespace

std::string ToString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCwf1:
      return "cwf1";
    case PolicyKind::kCwf2:
      return "cwf2";
    case PolicyKind::kUcb1:
      return "ucb1";
    case PolicyKind::kLlr:
      return "llr";
  }
  return "unknown";
}

std::optional<PolicyKind> ParsePolicyKind(std::string_view name) {
  for (const PolicyKind kind : kAllPolicies) {
    if (ToString(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string ToString(ArgmaxMethod method) {
  return method == ArgmaxMethod::kExhaustive ? "exhaustive" : "knapsack";
}

std::optional<ArgmaxMethod> ParseArgmaxMethod(std::string_view name) {
  if (name == "exhaustive") return ArgmaxMethod::kExhaustive;
  if (name == "knapsack") return ArgmaxMethod::kKnapsack;
  return std::nullopt;
}

ArmIndex ExhaustiveArgmax(const FeasibleSet& feasible,
                          std::span<const double> variable_values) {
  ArmIndex best = 0;
  double best_score = feasible.Score(0, variable_values);
  for (ArmIndex k = 1; k < feasible.size(); ++k) {
    const double score = feasible.Score(k, variable_values);
    if (score > best_score) {
      best_score = score;
      best = k;
    }
  }
  return best;
}

std::vector<ArmIndex> ChannelCoveringPlays(const FeasibleSet& feasible) {
  std::vector<ArmIndex> plays;
  for (std::size_t channel = 0; channel < feasible.num_channels(); ++channel) {
    std::optional<ArmIndex> found;
    for (ArmIndex k = 0; k < feasible.size() && !found; ++k) {
      if (feasible.arm(k).levels[channel] != 0) found = k;
    }
    if (!found) {
      throw std::invalid_argument("channel " + std::to_string(channel) +
                                  " is not powered by any feasible arm");
    }
    plays.push_back(*found);
  }
  return plays;
}

std::vector<ArmIndex> VariableCoveringPlays(const FeasibleSet& feasible) {
  std::vector<char> covered(feasible.num_variables(), 0);
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < feasible.num_variables(); ++v) {
    if (feasible.variable_used(v)) {
      ++remaining;
    } else {
      covered[v] = 1;
    }
  }
  std::vector<ArmIndex> plays;
  while (remaining > 0) {
    ArmIndex best = 0;
    std::size_t best_gain = 0;
    for (ArmIndex k = 0; k < feasible.size(); ++k) {
      std::size_t gain = 0;
      for (const std::uint32_t v : feasible.variables(k)) gain += !covered[v];
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    for (const std::uint32_t v : feasible.variables(best)) covered[v] = 1;
    remaining -= best_gain;
    plays.push_back(best);
  }
  return plays;
}

void ValidateFeedback(const FeasibleSet& feasible, ArmIndex arm,
                      std::span<const Observation> feedback) {
  const auto channels = feasible.channels(arm);
  if (feedback.size() != channels.size()) {
    throw std::invalid_argument(
        "feedback must cover exactly the support of the played arm");
  }
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (feedback[k].channel != channels[k]) {
      throw std::invalid_argument("observation for channel " +
                                  std::to_string(feedback[k].channel) +
                                  " outside the played support");
    }
    if (!(feedback[k].gain >= 0.0 && feedback[k].gain <= 1.0)) {
      throw std::invalid_argument("observed gain outside [0, 1]");
    }
  }
}

double ExplorationRadius(std::size_t exploration_l, std::uint64_t round,
                         std::uint64_t count) {
  if (count == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt((static_cast<double>(exploration_l) + 1.0) *
                   std::log(static_cast<double>(round)) /
                   static_cast<double>(count));
}

// -- CWF1 --------------------------------------------------------------------

Cwf1State MakeCwf1State(const FeasibleSet& feasible, std::size_t l) {
  Cwf1State state;
  state.y_bar.assign(feasible.num_variables(), 0.0);
  state.m.assign(feasible.num_channels(), 0);
  state.exploration_l = l;
  return state;
}

void Cwf1Indices(const Cwf1State& state, const FeasibleSet& feasible,
                 std::uint64_t round, std::span<double> out) {
  for (std::size_t i = 0; i < feasible.num_channels(); ++i) {
    const double bonus =
        ExplorationRadius(state.exploration_l, round, state.m[i]);
    const std::size_t begin = feasible.channel_offset(i);
    const std::size_t end = begin + feasible.levels()[i].size();
    for (std::size_t v = begin; v < end; ++v) out[v] = state.y_bar[v] + bonus;
  }
}

ArmIndex Cwf1Select(const Cwf1State& state, const FeasibleSet& feasible,
                    std::uint64_t round) {
  std::vector<double> indices(feasible.num_variables());
  Cwf1Indices(state, feasible, round, indices);
  return ExhaustiveArgmax(feasible, indices);
}

void Cwf1Update(Cwf1State& state, const RateFunction& rate,
                const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback) {
  ValidateFeedback(feasible, arm, feedback);
  for (const Observation& seen : feedback) {
    const std::size_t i = seen.channel;
    const double m = static_cast<double>(state.m[i]);
    const std::size_t begin = feasible.channel_offset(i);
    const auto& levels = feasible.levels()[i];
    for (std::size_t l = 0; l < levels.size(); ++l) {
      double& y_bar = state.y_bar[begin + l];
      y_bar = (y_bar * m + rate.Evaluate(i, levels[l], seen.gain)) / (m + 1.0);
    }
    ++state.m[i];
  }
  ++state.n;
}

Cwf1Policy::Cwf1Policy(const Scenario& scenario, const FeasibleSet& feasible,
                       const PolicyOptions& options)
    : rate_(scenario.rate()),
      feasible_(feasible),
      state_(MakeCwf1State(feasible, ResolveL(feasible, options))),
      indices_(feasible.num_variables()),
      knapsack_(MaybeKnapsack(scenario, feasible, options)) {
  initialization_ = ChannelCoveringPlays(feasible);
}

ArmIndex Cwf1Policy::Select(std::uint64_t round) {
  Cwf1Indices(state_, feasible_, round, indices_);
  return knapsack_ ? knapsack_->Solve(indices_)
                   : ExhaustiveArgmax(feasible_, indices_);
}

void Cwf1Policy::Update(ArmIndex arm, std::span<const Observation> feedback) {
  Cwf1Update(state_, rate_, feasible_, arm, feedback);
}

std::size_t Cwf1Policy::StateSize() const {
  return state_.y_bar.size() + state_.m.size();
}

std::string Cwf1Policy::Summary() const {
  return "cwf1 L=" + std::to_string(state_.exploration_l) +
         " n=" + std::to_string(state_.n) + " m=(" + Join(state_.m) +
         ") y_bar=(" + Join(state_.y_bar) + ")";
}

// -- CWF2 --------------------------------------------------------------------

Cwf2State MakeCwf2State(const FeasibleSet& feasible, std::size_t l) {
  Cwf2State state;
  state.x_bar.assign(feasible.num_channels(), 0.0);
  state.m.assign(feasible.num_channels(), 0);
  state.exploration_l = l;
  return state;
}

void Cwf2Indices(const Cwf2State& state, const RateFunction& rate,
                 const FeasibleSet& feasible, std::uint64_t round,
                 std::span<double> out) {
  for (std::size_t i = 0; i < feasible.num_channels(); ++i) {
    const double radius =
        ExplorationRadius(state.exploration_l, round, state.m[i]);
    const std::size_t begin = feasible.channel_offset(i);
    const auto& levels = feasible.levels()[i];
    for (std::size_t l = 0; l < levels.size(); ++l) {
      out[begin + l] = rate.Evaluate(i, levels[l], state.x_bar[i]) +
                       rate.Evaluate(i, levels[l], radius);
    }
  }
}

ArmIndex Cwf2Select(const Cwf2State& state, const RateFunction& rate,
                    const FeasibleSet& feasible, std::uint64_t round) {
  std::vector<double> indices(feasible.num_variables());
  Cwf2Indices(state, rate, feasible, round, indices);
  return ExhaustiveArgmax(feasible, indices);
}

void Cwf2Update(Cwf2State& state, const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback) {
  ValidateFeedback(feasible, arm, feedback);
  for (const Observation& seen : feedback) {
    const std::size_t i = seen.channel;
    const double m = static_cast<double>(state.m[i]);
    state.x_bar[i] = (state.x_bar[i] * m + seen.gain) / (m + 1.0);
    ++state.m[i];
  }
  ++state.n;
}

Cwf2Policy::Cwf2Policy(const Scenario& scenario, const FeasibleSet& feasible,
                       const PolicyOptions& options)
    : rate_(scenario.rate()),
      feasible_(feasible),
      state_(MakeCwf2State(feasible, ResolveL(feasible, options))),
      indices_(feasible.num_variables()),
      knapsack_(MaybeKnapsack(scenario, feasible, options)) {
  initialization_ = ChannelCoveringPlays(feasible);
}

ArmIndex Cwf2Policy::Select(std::uint64_t round) {
  Cwf2Indices(state_, rate_, feasible_, round, indices_);
  return knapsack_ ? knapsack_->Solve(indices_)
                   : ExhaustiveArgmax(feasible_, indices_);
}

void Cwf2Policy::Update(ArmIndex arm, std::span<const Observation> feedback) {
  Cwf2Update(state_, feasible_, arm, feedback);
}

std::size_t Cwf2Policy::StateSize() const {
  return state_.x_bar.size() + state_.m.size();
}

std::string Cwf2Policy::Summary() const {
  return "cwf2 L=" + std::to_string(state_.exploration_l) +
         " n=" + std::to_string(state_.n) + " m=(" + Join(state_.m) +
         ") x_bar=(" + Join(state_.x_bar) + ")";
}

// -- UCB1 --------------------------------------------------------------------

Ucb1State MakeUcb1State(const FeasibleSet& feasible) {
  Ucb1State state;
  state.mean.assign(feasible.size(), 0.0);
  state.m.assign(feasible.size(), 0);
  return state;
}

ArmIndex Ucb1Select(const Ucb1State& state, std::uint64_t round) {
  // Unplayed arms first, in index order.
  for (ArmIndex k = 0; k < state.m.size(); ++k) {
    if (state.m[k] == 0) return k;
  }
  const double log_n = std::log(static_cast<double>(round));
  ArmIndex best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (ArmIndex k = 0; k < state.m.size(); ++k) {
    const double index =
        state.mean[k] +
        std::sqrt(2.0 * log_n / static_cast<double>(state.m[k]));
    if (index > best_index) {
      best_index = index;
      best = k;
    }
  }
  return best;
}

void Ucb1Update(Ucb1State& state, const RateFunction& rate,
                const FeasibleSet& feasible, ArmIndex arm,
                std::span<const Observation> feedback) {
  ValidateFeedback(feasible, arm, feedback);
  const PowerAllocation& allocation = feasible.arm(arm);
  double reward = 0.0;
  for (const Observation& seen : feedback) {
    reward +=
        rate.Evaluate(seen.channel, allocation.levels[seen.channel], seen.gain);
  }
  const double m = static_cast<double>(state.m[arm]);
  state.mean[arm] = (state.mean[arm] * m + reward) / (m + 1.0);
  ++state.m[arm];
  ++state.n;
}

Ucb1Policy::Ucb1Policy(const Scenario& scenario, const FeasibleSet& feasible)
    : rate_(scenario.rate()),
      feasible_(feasible),
      state_(MakeUcb1State(feasible)) {
  initialization_.resize(feasible.size());
  for (ArmIndex k = 0; k < feasible.size(); ++k) initialization_[k] = k;
}

ArmIndex Ucb1Policy::Select(std::uint64_t round) {
  return Ucb1Select(state_, round);
}

void Ucb1Policy::Update(ArmIndex arm, std::span<const Observation> feedback) {
  Ucb1Update(state_, rate_, feasible_, arm, feedback);
}

std::size_t Ucb1Policy::StateSize() const {
  return state_.mean.size() + state_.m.size();
}

std::string Ucb1Policy::Summary() const {
  const auto most_played =
      std::max_element(state_.m.begin(), state_.m.end()) - state_.m.begin();
  return "ucb1 n=" + std::to_string(state_.n) +
         " most_played=" + ToString(feasible_.arm(most_played)) +
         " plays=" + std::to_string(state_.m[most_played]);
}

// -- LLR on lifted variables -------------------------------------------------

LlrState MakeLlrState(const FeasibleSet& feasible, std::size_t l) {
  LlrState state;
  state.y_bar.assign(feasible.num_variables(), 0.0);
  state.m.assign(feasible.num_variables(), 0);
  state.exploration_l = l;
  return state;
}

void LlrIndices(const LlrState& state, const FeasibleSet& feasible,
                std::uint64_t round, std::span<double> out) {
  for (std::size_t v = 0; v < feasible.num_variables(); ++v) {
    out[v] = feasible.variable_used(v)
                 ? state.y_bar[v] +
                       ExplorationRadius(state.exploration_l, round, state.m[v])
                 : 0.0;
  }
}

ArmIndex LlrSelect(const LlrState& state, const FeasibleSet& feasible,
                   std::uint64_t round) {
  std::vector<double> indices(feasible.num_variables());
  LlrIndices(state, feasible, round, indices);
  return ExhaustiveArgmax(feasible, indices);
}

void LlrUpdate(LlrState& state, const RateFunction& rate,
               const FeasibleSet& feasible, ArmIndex arm,
               std::span<const Observation> feedback) {
  ValidateFeedback(feasible, arm, feedback);
  const auto variables = feasible.variables(arm);
  for (std::size_t k = 0; k < feedback.size(); ++k) {
    const std::size_t v = variables[k];
    const double m = static_cast<double>(state.m[v]);
    const double y = rate.Evaluate(
        feedback[k].channel, feasible.variable_power(v), feedback[k].gain);
    state.y_bar[v] = (state.y_bar[v] * m + y) / (m + 1.0);
    ++state.m[v];
  }
  ++state.n;
}

LlrPolicy::LlrPolicy(const Scenario& scenario, const FeasibleSet& feasible,
                     const PolicyOptions& options)
    : rate_(scenario.rate()),
      feasible_(feasible),
      state_(MakeLlrState(feasible, ResolveL(feasible, options))),
      indices_(feasible.num_variables()),
      knapsack_(MaybeKnapsack(scenario, feasible, options)) {
  initialization_ = VariableCoveringPlays(feasible);
}

ArmIndex LlrPolicy::Select(std::uint64_t round) {
  LlrIndices(state_, feasible_, round, indices_);
  return knapsack_ ? knapsack_->Solve(indices_)
                   : ExhaustiveArgmax(feasible_, indices_);
}

void LlrPolicy::Update(ArmIndex arm, std::span<const Observation> feedback) {
  LlrUpdate(state_, rate_, feasible_, arm, feedback);
}

std::size_t LlrPolicy::StateSize() const {
  return state_.y_bar.size() + state_.m.size();
}

std::string LlrPolicy::Summary() const {
  return "llr L=" + std::to_string(state_.exploration_l) +
         " n=" + std::to_string(state_.n) + " m=(" + Join(state_.m) + ")";
}

std::unique_ptr<Policy> MakePolicy(PolicyKind kind, const Scenario& scenario,
                                   const FeasibleSet& feasible,
                                   const PolicyOptions& options) {
  switch (kind) {
    case PolicyKind::kCwf1:
      return std::make_unique<Cwf1Policy>(scenario, feasible, options);
    case PolicyKind::kCwf2:
      return std::make_unique<Cwf2Policy>(scenario, feasible, options);
    case PolicyKind::kUcb1:
      return std::make_unique<Ucb1Policy>(scenario, feasible);
    case PolicyKind::kLlr:
      return std::make_unique<LlrPolicy>(scenario, feasible, options);
  }
  throw std::invalid_argument("unknown policy");
}

}  // namespace swf
