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

#ifndef SWF_MODEL_H_
#define SWF_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swf/channels.h"
#include "swf/rate_function.h"

namespace swf {

// Position of an arm in the lexicographically ordered feasible set.
using ArmIndex = std::size_t;

// One power level per channel; a_i == 0 means channel i is left idle.
struct PowerAllocation {
  std::vector<PowerMw> levels;

  // A_a = {i : a_i != 0}, ascending.
  std::vector<std::size_t> Support() const;
  PowerMw Total() const;
  PowerMw MaxLevel() const;

  friend bool operator==(const PowerAllocation&,
                         const PowerAllocation&) = default;
  friend auto operator<=>(const PowerAllocation&,
                          const PowerAllocation&) = default;
};

// "(20,20,0,20)"
std::string ToString(const PowerAllocation& allocation);

struct ChannelConfig {
  // B_i: allowed nonzero powers. Stored sorted ascending.
  std::vector<PowerMw> levels;
  ChannelDistribution law;

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

// N channels with their level sets, laws and rate function, plus the total
// power budget. Immutable once built.
class Scenario {
 public:
  Scenario(std::vector<ChannelConfig> channels, PowerMw total_power,
           RateFunction rate, bool include_zero_allocation = true);

  std::size_t num_channels() const { return channels_.size(); }
  const std::vector<PowerMw>& levels(std::size_t channel) const {
    return channels_[channel].levels;
  }
  std::vector<std::vector<PowerMw>> all_levels() const;
  const std::vector<ChannelDistribution>& laws() const { return laws_; }
  const std::vector<ChannelConfig>& channels() const { return channels_; }
  PowerMw total_power() const { return total_power_; }
  const RateFunction& rate() const { return rate_; }
  bool include_zero_allocation() const { return include_zero_allocation_; }

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::vector<ChannelConfig> channels_;
  std::vector<ChannelDistribution> laws_;
  PowerMw total_power_;
  RateFunction rate_;
  bool include_zero_allocation_;
};

// The finite arm set F together with the lifted-variable layout: variable
// v stands for the pair (channel i, level B_i[l]) and is numbered
// channel-major. Each arm is stored as the list of variables on its
// support, so scoring an arm is a short sum.
class FeasibleSet {
 public:
  FeasibleSet(std::vector<PowerAllocation> arms,
              std::vector<std::vector<PowerMw>> levels);

  std::size_t size() const { return arms_.size(); }
  std::size_t num_channels() const { return levels_.size(); }
  const PowerAllocation& arm(ArmIndex index) const { return arms_[index]; }
  const std::vector<PowerAllocation>& arms() const { return arms_; }

  // L = max_a |A_a|.
  std::size_t max_support() const { return max_support_; }
  // a_max = max over F of max_i a_i.
  PowerMw a_max() const { return a_max_; }

  std::optional<ArmIndex> Find(const PowerAllocation& allocation) const;

  std::size_t num_variables() const { return variable_channel_.size(); }
  std::size_t variable_channel(std::size_t v) const {
    return variable_channel_[v];
  }
  PowerMw variable_power(std::size_t v) const { return variable_power_[v]; }
  // First variable of channel i; its levels follow contiguously.
  std::size_t channel_offset(std::size_t channel) const {
    return channel_offsets_[channel];
  }
  const std::vector<std::vector<PowerMw>>& levels() const { return levels_; }

  // Variables (and their channels) on the support of an arm, by channel.
  std::span<const std::uint32_t> variables(ArmIndex index) const {
    return {arm_variables_.data() + arm_offsets_[index],
            arm_offsets_[index + 1] - arm_offsets_[index]};
  }
  std::span<const std::uint32_t> channels(ArmIndex index) const {
    return {arm_channels_.data() + arm_offsets_[index],
            arm_offsets_[index + 1] - arm_offsets_[index]};
  }

  // True when variable v lies on the support of at least one arm.
  bool variable_used(std::size_t v) const { return variable_used_[v] != 0; }

  // Sum of variable_values over the support of the arm, in channel order.
  double Score(ArmIndex index, std::span<const double> variable_values) const {
    double score = 0.0;
    for (const std::uint32_t v : variables(index)) score += variable_values[v];
    return score;
  }

 private:
  std::vector<PowerAllocation> arms_;
  std::vector<std::vector<PowerMw>> levels_;
  std::size_t max_support_ = 0;
  PowerMw a_max_ = 0;
  std::vector<std::size_t> channel_offsets_;
  std::vector<std::size_t> variable_channel_;
  std::vector<PowerMw> variable_power_;
  std::vector<char> variable_used_;
  std::vector<std::size_t> arm_offsets_;
  std::vector<std::uint32_t> arm_variables_;
  std::vector<std::uint32_t> arm_channels_;
};

// All level vectors with a_i in {0} U B_i and sum a_i <= total_power, in
// lexicographic order. Throws std::invalid_argument when nothing is feasible.
FeasibleSet EnumerateFeasibleSet(std::span<const std::vector<PowerMw>> levels,
                                 PowerMw total_power,
                                 bool include_zero_allocation);
FeasibleSet EnumerateFeasibleSet(const Scenario& scenario);

// R_a = sum over i in A_a of f_i(a_i, x_i). Gains must lie in [0, 1].
double RealizedReward(const RateFunction& rate,
                      const PowerAllocation& allocation,
                      std::span<const double> gains);

}  // namespace swf

#endif  // SWF_MODEL_H_
