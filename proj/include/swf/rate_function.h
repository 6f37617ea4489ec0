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

#ifndef SWF_RATE_FUNCTION_H_
#define SWF_RATE_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swf {

// Powers are integer milliwatts so that set membership is exact.
using PowerMw = std::int64_t;

// Piecewise-linear curve through (x_k, y_k). The first knot is (0, 0) and
// both coordinates are strictly increasing. Beyond the last knot the final
// segment is extended linearly.
class TabulatedCurve {
 public:
  TabulatedCurve(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

  friend bool operator==(const TabulatedCurve&,
                         const TabulatedCurve&) = default;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// The per-channel power-to-rate map f_i(a, x): zero at x = 0, continuous and
// strictly increasing in x.
class RateFunction {
 public:
  enum class Kind { kShannonLog, kTabulated };

  // f(a, x) = log(1 + a x) on every channel.
  static RateFunction ShannonLog();

  // tables[i] holds one curve per power level of channel i.
  static RateFunction Tabulated(
      std::vector<std::map<PowerMw, TabulatedCurve>> tables);

  Kind kind() const { return kind_; }

  double Evaluate(std::size_t channel, PowerMw power, double x) const;

  // Inverse in x of f(a, .) when a closed form exists (shannon-log only).
  std::optional<double> ClosedFormInverse(std::size_t channel, PowerMw power,
                                          double rate) const;

  // True when Evaluate is defined for this (channel, level).
  bool Covers(std::size_t channel, PowerMw power) const;

  const std::vector<std::map<PowerMw, TabulatedCurve>>& tables() const {
    return tables_;
  }

  friend bool operator==(const RateFunction&, const RateFunction&) = default;

 private:
  explicit RateFunction(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::map<PowerMw, TabulatedCurve>> tables_;
};

std::string ToString(RateFunction::Kind kind);

struct SubadditivityViolation {
  std::size_t channel = 0;
  PowerMw power = 0;
  double x = 0.0;
  double y = 0.0;
  double lhs = 0.0;  // f(a, x + y)
  double rhs = 0.0;  // f(a, x) + f(a, y)
};

struct SubadditivityReport {
  bool passed = true;
  // No pair of nonzero grid points with x + y <= 1 exists.
  bool vacuous = false;
  std::size_t pairs_checked = 0;
  std::optional<SubadditivityViolation> violation;
  std::string warning;
};

// Checks f_i(a, x + y) <= f_i(a, x) + f_i(a, y) for all nonzero grid points
// x, y in {step, 2 step, ...} with x + y <= 1, over every channel and level.
// Stops at the first violation.
SubadditivityReport ValidateSubadditivity(
    const RateFunction& rate, std::span<const std::vector<PowerMw>> levels,
    double grid_step);

}  // namespace swf

#endif  // SWF_RATE_FUNCTION_H_
