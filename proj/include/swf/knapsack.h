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

#ifndef SWF_KNAPSACK_H_
#define SWF_KNAPSACK_H_

#include <cstddef>
#include <span>
#include <vector>

#include "swf/model.h"

namespace swf {

// Multiple-choice knapsack over (channel, level) variables: maximizes
// sum_i v(i, a_i) subject to sum_i a_i <= P, with v(i, 0) = 0. Each channel
// is a class whose items are its levels plus "idle".
//
// The feasible set must be the full budget-constrained grid including the
// zero allocation, which is what makes the objective separable. Among exact
// ties the lexicographically smallest allocation (smallest arm index) wins.
class KnapsackArgmax {
 public:
  KnapsackArgmax(const FeasibleSet& feasible, PowerMw total_power);

  ArmIndex Solve(std::span<const double> variable_values);

  std::size_t capacity_units() const { return capacity_; }

 private:
  const FeasibleSet& feasible_;
  PowerMw unit_ = 1;
  std::size_t capacity_ = 0;
  // weights_[i][l]: level l of channel i in units.
  std::vector<std::vector<std::size_t>> weights_;
  // best_[i * (capacity_ + 1) + c]: best value of channels i..N-1 within c.
  std::vector<double> best_;
  PowerAllocation scratch_;
};

}  // namespace swf

#endif  // SWF_KNAPSACK_H_
