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

#include "swf/model.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace swf {

std::vector<std::size_t> PowerAllocation::Support() const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] != 0) support.push_back(i);
  }
  return support;
}

PowerMw PowerAllocation::Total() const {
  return std::accumulate(levels.begin(), levels.end(), PowerMw{0});
}

PowerMw PowerAllocation::MaxLevel() const {
  return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

std::string ToString(const PowerAllocation& allocation) {
  std::string out = "(";
  for (std::size_t i = 0; i < allocation.levels.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(allocation.levels[i]);
  }
  return out + ")";
}

Scenario::Scenario(std::vector<ChannelConfig> channels, PowerMw total_power,
                   RateFunction rate, bool include_zero_allocation)
    : channels_(std::move(channels)),
      total_power_(total_power),
      rate_(std::move(rate)),
      include_zero_allocation_(include_zero_allocation) {
  if (channels_.empty()) {
    throw std::invalid_argument("scenario needs at least one channel");
  }
  PowerMw smallest = 0;
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    auto& levels = channels_[i].levels;
    if (levels.empty()) {
      throw std::invalid_argument("channel " + std::to_string(i) +
                                  ": power level set is empty");
    }
    std::sort(levels.begin(), levels.end());
    if (std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
      throw std::invalid_argument("channel " + std::to_string(i) +
                                  ": duplicate power level");
    }
    if (levels.front() <= 0) {
      throw std::invalid_argument("channel " + std::to_string(i) +
                                  ": power levels must be positive");
    }
    for (const PowerMw power : levels) {
      if (!rate_.Covers(i, power)) {
        throw std::invalid_argument(
            "channel " + std::to_string(i) + ": rate function has no curve " +
            "for level " + std::to_string(power) + " mW");
      }
    }
    smallest = i == 0 ? levels.front() : std::min(smallest, levels.front());
    laws_.push_back(channels_[i].law);
  }
  if (total_power_ < smallest) {
    throw std::invalid_argument(
        "total power is below every channel's smallest level");
  }
}

std::vector<std::vector<PowerMw>> Scenario::all_levels() const {
  std::vector<std::vector<PowerMw>> out;
  out.reserve(channels_.size());
  for (const auto& channel : channels_) out.push_back(channel.levels);
  return out;
}

FeasibleSet::FeasibleSet(std::vector<PowerAllocation> arms,
                         std::vector<std::vector<PowerMw>> levels)
    : arms_(std::move(arms)), levels_(std::move(levels)) {
  const std::size_t n = levels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    channel_offsets_.push_back(variable_channel_.size());
    for (const PowerMw power : levels_[i]) {
      variable_channel_.push_back(i);
      variable_power_.push_back(power);
    }
  }
  variable_used_.assign(variable_channel_.size(), 0);
  arm_offsets_.push_back(0);
  for (std::size_t k = 0; k < arms_.size(); ++k) {
    const PowerAllocation& arm = arms_[k];
    if (arm.levels.size() != n) {
      throw std::invalid_argument("arm " + ToString(arm) +
                                  " has the wrong number of channels");
    }
    if (k > 0 && !(arms_[k - 1] < arm)) {
      throw std::invalid_argument(
          "feasible arms must be strictly lexicographically increasing");
    }
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (arm.levels[i] == 0) continue;
      const auto& channel_levels = levels_[i];
      const auto it = std::lower_bound(channel_levels.begin(),
                                       channel_levels.end(), arm.levels[i]);
      if (it == channel_levels.end() || *it != arm.levels[i]) {
        throw std::invalid_argument("arm " + ToString(arm) +
                                    " uses a level outside B_" +
                                    std::to_string(i));
      }
      const std::size_t v = channel_offsets_[i] + (it - channel_levels.begin());
      arm_variables_.push_back(static_cast<std::uint32_t>(v));
      arm_channels_.push_back(static_cast<std::uint32_t>(i));
      variable_used_[v] = 1;
      ++support;
    }
    arm_offsets_.push_back(arm_variables_.size());
    max_support_ = std::max(max_support_, support);
    a_max_ = std::max(a_max_, arm.MaxLevel());
  }
}

std::optional<ArmIndex> FeasibleSet::Find(
    const PowerAllocation& allocation) const {
  const auto it = std::lower_bound(arms_.begin(), arms_.end(), allocation);
  if (it == arms_.end() || *it != allocation) return std::nullopt;
  return static_cast<ArmIndex>(it - arms_.begin());
}

FeasibleSet EnumerateFeasibleSet(std::span<const std::vector<PowerMw>> levels,
                                 PowerMw total_power,
                                 bool include_zero_allocation) {
  const std::size_t n = levels.size();
  if (n == 0) throw std::invalid_argument("no channels to allocate over");
  std::vector<std::vector<PowerMw>> sorted_levels;
  std::vector<std::vector<PowerMw>> options;
  for (const auto& channel_levels : levels) {
    std::vector<PowerMw> sorted(channel_levels.begin(), channel_levels.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<PowerMw> choice{0};
    choice.insert(choice.end(), sorted.begin(), sorted.end());
    sorted_levels.push_back(std::move(sorted));
    options.push_back(std::move(choice));
  }

  // Depth-first over channels with options ascending yields lexicographic
  // order; partial sums prune branches that already exceed the budget.
  std::vector<PowerAllocation> arms;
  PowerAllocation current{std::vector<PowerMw>(n, 0)};
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  PowerMw used = 0;
  while (true) {
    if (depth == n) {
      if (include_zero_allocation || used > 0) arms.push_back(current);
      --depth;
      used -= current.levels[depth];
      ++choice[depth];
    }
    if (choice[depth] < options[depth].size() &&
        used + options[depth][choice[depth]] <= total_power) {
      current.levels[depth] = options[depth][choice[depth]];
      used += current.levels[depth];
      ++depth;
      if (depth < n) choice[depth] = 0;
      continue;
    }
    // Options are ascending, so the rest of this channel is over budget too.
    current.levels[depth] = 0;
    if (depth == 0) break;
    --depth;
    used -= current.levels[depth];
    ++choice[depth];
  }
  if (arms.empty()) {
    throw std::invalid_argument(
        "feasible set is empty: the budget admits no nonzero allocation and "
        "the zero allocation is excluded");
  }
  return FeasibleSet(std::move(arms), std::move(sorted_levels));
}

FeasibleSet EnumerateFeasibleSet(const Scenario& scenario) {
  const auto levels = scenario.all_levels();
  return EnumerateFeasibleSet(levels, scenario.total_power(),
                              scenario.include_zero_allocation());
}

double RealizedReward(const RateFunction& rate,
                      const PowerAllocation& allocation,
                      std::span<const double> gains) {
  if (gains.size() != allocation.levels.size()) {
    throw std::invalid_argument("gain vector length differs from N");
  }
  double reward = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (!(gains[i] >= 0.0 && gains[i] <= 1.0)) {
      throw std::invalid_argument("gains must lie in [0, 1]");
    }
    if (allocation.levels[i] != 0) {
      reward += rate.Evaluate(i, allocation.levels[i], gains[i]);
    }
  }
  return reward;
}

}  // namespace swf
