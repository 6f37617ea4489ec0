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

#include "swf/rate_function.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace swf {
namespace {

// Slack for accumulated rounding in x + y <= 1 and in the inequality itself.
constexpr double kGridSlack = 1e-12;

}  // namespace

TabulatedCurve::TabulatedCurve(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw std::invalid_argument("tabulated curve: x and y sizes differ");
  }
  if (xs_.size() < 2) {
    throw std::invalid_argument("tabulated curve: need at least two knots");
  }
  if (xs_.front() != 0.0 || ys_.front() != 0.0) {
    throw std::invalid_argument("tabulated curve: first knot must be (0, 0)");
  }
  for (std::size_t k = 1; k < xs_.size(); ++k) {
    if (!(xs_[k] > xs_[k - 1])) {
      throw std::invalid_argument(
          "tabulated curve: knot x values must be strictly increasing");
    }
    if (!(ys_[k] > ys_[k - 1])) {
      throw std::invalid_argument(
          "tabulated curve: rate must be strictly increasing in x");
    }
  }
}

double TabulatedCurve::operator()(double x) const {
  // Segment k spans [xs_[k], xs_[k+1]]; the last one is extended.
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t k = it == xs_.begin() ? 0 : (it - xs_.begin()) - 1;
  k = std::min(k, xs_.size() - 2);
  const double slope = (ys_[k + 1] - ys_[k]) / (xs_[k + 1] - xs_[k]);
  return ys_[k] + slope * (x - xs_[k]);
}

RateFunction RateFunction::ShannonLog() {
  return RateFunction(Kind::kShannonLog);
}

RateFunction RateFunction::Tabulated(
    std::vector<std::map<PowerMw, TabulatedCurve>> tables) {
  RateFunction rate(Kind::kTabulated);
  rate.tables_ = std::move(tables);
  return rate;
}

double RateFunction::Evaluate(std::size_t channel, PowerMw power,
                              double x) const {
  if (kind_ == Kind::kShannonLog) {
    return std::log1p(static_cast<double>(power) * x);
  }
  return tables_.at(channel).at(power)(x);
}

std::optional<double> RateFunction::ClosedFormInverse(std::size_t /*channel*/,
                                                      PowerMw power,
                                                      double rate) const {
  if (kind_ != Kind::kShannonLog) return std::nullopt;
  return std::expm1(rate) / static_cast<double>(power);
}

bool RateFunction::Covers(std::size_t channel, PowerMw power) const {
  if (kind_ == Kind::kShannonLog) return true;
  return channel < tables_.size() && tables_[channel].contains(power);
}

std::string ToString(RateFunction::Kind kind) {
  switch (kind) {
    case RateFunction::Kind::kShannonLog:
      return "shannon_log";
    case RateFunction::Kind::kTabulated:
      return "tabulated";
  }
  return "unknown";
}

SubadditivityReport ValidateSubadditivity(
    const RateFunction& rate, std::span<const std::vector<PowerMw>> levels,
    double grid_step) {
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("grid_step must be positive");
  }
  SubadditivityReport report;
  const auto points =
      static_cast<std::size_t>(std::floor(1.0 / grid_step + kGridSlack));
  for (std::size_t channel = 0; channel < levels.size(); ++channel) {
    for (const PowerMw power : levels[channel]) {
      for (std::size_t i = 1; i <= points; ++i) {
        const double x = static_cast<double>(i) * grid_step;
        for (std::size_t j = i; j <= points; ++j) {
          const double y = static_cast<double>(j) * grid_step;
          if (x + y > 1.0 + kGridSlack) break;
          ++report.pairs_checked;
          const double lhs = rate.Evaluate(channel, power, x + y);
          const double rhs = rate.Evaluate(channel, power, x) +
                             rate.Evaluate(channel, power, y);
          if (lhs > rhs + kGridSlack * std::max(1.0, std::abs(rhs))) {
            report.passed = false;
            report.violation =
                SubadditivityViolation{channel, power, x, y, lhs, rhs};
            return report;
          }
        }
      }
    }
  }
  if (report.pairs_checked == 0) {
    report.vacuous = true;
    report.warning =
        "no interior grid pairs with x + y <= 1; subadditivity unchecked";
  }
  return report;
}

}  // namespace swf
