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

#include "swf/channels.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace swf {
namespace {

constexpr double kProbabilityTolerance = 1e-12;
constexpr unsigned kQuadratureDepth = 20;
constexpr double kQuadratureRelTol = 1e-13;

double Integrate(const std::function<double(double)>& f, double lo, double hi) {
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  return Quadrature::integrate(f, lo, hi, kQuadratureDepth, kQuadratureRelTol);
}

}  // namespace

double NoisePowerWatts(double noise_density_dbw_per_hz, double bandwidth_hz) {
  return std::pow(10.0, noise_density_dbw_per_hz / 10.0) * bandwidth_hz;
}

double RayleighGainQuantile(double sigma, double noise_density_dbw_per_hz,
                            double bandwidth_hz, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1)");
  }
  // h^2 ~ Exponential with mean 2 sigma^2.
  const double h2 = -2.0 * sigma * sigma * std::log1p(-p);
  return h2 / NoisePowerWatts(noise_density_dbw_per_hz, bandwidth_hz);
}

ChannelDistribution ChannelDistribution::Discrete(
    std::vector<double> values, std::vector<double> probabilities) {
  if (values.empty() || values.size() != probabilities.size()) {
    throw std::invalid_argument(
        "discrete law needs matching nonempty values and probabilities");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] >= 0.0 && values[k] <= 1.0)) {
      throw std::invalid_argument("discrete law support must lie in [0, 1]");
    }
    if (!(probabilities[k] >= 0.0)) {
      throw std::invalid_argument("discrete law probabilities must be >= 0");
    }
    total += probabilities[k];
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw std::invalid_argument("discrete law probabilities must sum to 1");
  }
  ChannelDistribution law;
  law.kind_ = Kind::kDiscrete;
  law.values_ = std::move(values);
  law.probabilities_ = std::move(probabilities);
  law.cumulative_.resize(law.probabilities_.size());
  std::partial_sum(law.probabilities_.begin(), law.probabilities_.end(),
                   law.cumulative_.begin());
  law.cumulative_.back() = 1.0;
  return law;
}

ChannelDistribution ChannelDistribution::TruncatedRayleigh(
    double sigma, double noise_density_dbw_per_hz, double bandwidth_hz,
    double g_max) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
  if (!(g_max > 0.0)) throw std::invalid_argument("g_max must be positive");
  if (!std::isfinite(noise_density_dbw_per_hz)) {
    throw std::invalid_argument("noise density must be finite");
  }
  ChannelDistribution law;
  law.kind_ = Kind::kTruncatedRayleigh;
  law.sigma_ = sigma;
  law.noise_density_dbw_per_hz_ = noise_density_dbw_per_hz;
  law.bandwidth_hz_ = bandwidth_hz;
  law.g_max_ = g_max;
  law.rate_ = NoisePowerWatts(noise_density_dbw_per_hz, bandwidth_hz) * g_max /
              (2.0 * sigma * sigma);
  return law;
}

double ChannelDistribution::Transform(double u) const {
  if (kind_ == Kind::kDiscrete) {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto k =
        std::min<std::size_t>(it - cumulative_.begin(), values_.size() - 1);
    return values_[k];
  }
  return std::min(1.0, -std::log1p(-u) / rate_);
}

double ChannelDistribution::truncation_mass() const {
  if (kind_ == Kind::kDiscrete) return 0.0;
  return std::exp(-rate_);
}

double ChannelDistribution::Expectation(
    const std::function<double(double)>& g) const {
  if (kind_ == Kind::kDiscrete) {
    double sum = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (probabilities_[k] > 0.0) sum += probabilities_[k] * g(values_[k]);
    }
    return sum;
  }
  const double c = rate_;
  const auto integrand = [&](double x) { return g(x) * c * std::exp(-c * x); };
  // Most of the exponential mass sits within a few multiples of 1/c; split
  // there so the adaptive rule sees a smooth integrand on each piece.
  double sum = 0.0;
  double lo = 0.0;
  for (const double multiple : {1.0, 4.0, 16.0, 64.0}) {
    const double hi = multiple / c;
    if (hi >= 1.0) break;
    sum += Integrate(integrand, lo, hi);
    lo = hi;
  }
  sum += Integrate(integrand, lo, 1.0);
  return sum + truncation_mass() * g(1.0);
}

double ChannelDistribution::Mean() const {
  return Expectation([](double x) { return x; });
}

double ChannelDistribution::ExpectedRate(const RateFunction& rate,
                                         std::size_t channel,
                                         PowerMw power) const {
  if (power == 0) {
    throw std::invalid_argument("expected rate requires a nonzero power");
  }
  return Expectation(
      [&](double x) { return rate.Evaluate(channel, power, x); });
}

bool ChannelDistribution::IsDegenerate() const {
  if (kind_ != Kind::kDiscrete) return false;
  std::size_t atoms = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (probabilities_[k] > 0.0) ++atoms;
  }
  if (atoms <= 1) return true;
  // Repeated support points with positive mass still form one atom.
  double first = -1.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (probabilities_[k] <= 0.0) continue;
    if (first < 0.0) first = values_[k];
    if (values_[k] != first) return false;
  }
  return true;
}

void SampleGainsInto(std::span<const ChannelDistribution> laws,
                     RandomStream& rng, std::span<double> out) {
  for (std::size_t i = 0; i < laws.size(); ++i) {
    out[i] = laws[i].Transform(rng.NextUniform());
  }
}

GainSample SampleGains(std::span<const ChannelDistribution> laws,
                       RandomStream& rng, std::uint64_t round) {
  GainSample sample;
  sample.round = round;
  sample.values.resize(laws.size());
  SampleGainsInto(laws, rng, sample.values);
  return sample;
}

}  // namespace swf
