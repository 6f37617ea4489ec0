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

#include "swf/knapsack.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swf {

KnapsackArgmax::KnapsackArgmax(const FeasibleSet& feasible, PowerMw total_power)
    : feasible_(feasible) {
  const std::size_t n = feasible.num_channels();
  if (!feasible.Find(PowerAllocation{std::vector<PowerMw>(n, 0)})) {
    throw std::invalid_argument(
        "knapsack argmax needs the zero allocation in the feasible set");
  }
  PowerMw unit = total_power;
  for (const auto& levels : feasible.levels()) {
    for (const PowerMw power : levels) unit = std::gcd(unit, power);
  }
  unit_ = std::max<PowerMw>(unit, 1);
  capacity_ = static_cast<std::size_t>(total_power / unit_);
  weights_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const PowerMw power : feasible.levels()[i]) {
      weights_[i].push_back(static_cast<std::size_t>(power / unit_));
    }
  }
  best_.assign((n + 1) * (capacity_ + 1), 0.0);
  scratch_.levels.assign(n, 0);
}

ArmIndex KnapsackArgmax::Solve(std::span<const double> variable_values) {
  const std::size_t n = feasible_.num_channels();
  const std::size_t stride = capacity_ + 1;
  for (std::size_t i = n; i-- > 0;) {
    const double* next = &best_[(i + 1) * stride];
    double* row = &best_[i * stride];
    const std::size_t offset = feasible_.channel_offset(i);
    for (std::size_t c = 0; c <= capacity_; ++c) {
      double value = next[c];
      for (std::size_t l = 0; l < weights_[i].size(); ++l) {
        if (weights_[i][l] > c) break;
        value = std::max(
            value, variable_values[offset + l] + next[c - weights_[i][l]]);
      }
      row[c] = value;
    }
  }
  // Walk forward taking the smallest level that attains the optimum.
  std::size_t c = capacity_;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = best_[i * stride + c];
    const double* next = &best_[(i + 1) * stride];
    const std::size_t offset = feasible_.channel_offset(i);
    scratch_.levels[i] = 0;
    if (next[c] == target) continue;
    for (std::size_t l = 0; l < weights_[i].size(); ++l) {
      if (weights_[i][l] > c) break;
      if (variable_values[offset + l] + next[c - weights_[i][l]] == target) {
        scratch_.levels[i] = feasible_.levels()[i][l];
        c -= weights_[i][l];
        break;
      }
    }
  }
  const auto arm = feasible_.Find(scratch_);
  if (!arm) throw std::logic_error("knapsack produced an infeasible arm");
  return *arm;
}

}  // namespace swf
