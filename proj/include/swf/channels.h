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

#ifndef SWF_CHANNELS_H_
#define SWF_CHANNELS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "swf/random.h"
#include "swf/rate_function.h"

namespace swf {

// Quantile of the Rayleigh gain-to-noise ratio that "p999" resolves to.
inline constexpr double kDefaultGMaxQuantile = 0.999;

// Noise power N0 * B in watts for a density given in dBW/Hz.
double NoisePowerWatts(double noise_density_dbw_per_hz, double bandwidth_hz);

// p-quantile of g = h^2 / (N0 B) with h ~ Rayleigh(sigma).
double RayleighGainQuantile(double sigma, double noise_density_dbw_per_hz,
                            double bandwidth_hz, double p);

// Law of one normalized gain-to-noise ratio X in [0, 1].
//
// Truncated Rayleigh: h ~ Rayleigh(sigma), g = h^2 / (N0 B), and
// X = min(1, g / g_max). X is then exponential with rate
// c = N0 B g_max / (2 sigma^2) on [0, 1) plus an atom of mass exp(-c) at 1.
class ChannelDistribution {
 public:
  enum class Kind { kDiscrete, kTruncatedRayleigh };

  static ChannelDistribution Discrete(std::vector<double> values,
                                      std::vector<double> probabilities);
  static ChannelDistribution TruncatedRayleigh(double sigma,
                                               double noise_density_dbw_per_hz,
                                               double bandwidth_hz,
                                               double g_max);

  Kind kind() const { return kind_; }

  // Maps u in [0, 1) to a draw of X by inversion.
  double Transform(double u) const;

  // E[g(X)]. Exact for discrete laws; adaptive Gauss-Kronrod on the
  // continuous part plus the truncation atom for Rayleigh laws.
  double Expectation(const std::function<double(double)>& g) const;

  double Mean() const;
  double ExpectedRate(const RateFunction& rate, std::size_t channel,
                      PowerMw power) const;

  bool IsDegenerate() const;

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  double sigma() const { return sigma_; }
  double noise_density_dbw_per_hz() const { return noise_density_dbw_per_hz_; }
  double bandwidth_hz() const { return bandwidth_hz_; }
  double g_max() const { return g_max_; }
  // Rate c of the exponential part; the atom at 1 has mass exp(-c).
  double exponential_rate() const { return rate_; }
  double truncation_mass() const;

  friend bool operator==(const ChannelDistribution&,
                         const ChannelDistribution&) = default;

 private:
  ChannelDistribution() = default;

  Kind kind_ = Kind::kDiscrete;
  std::vector<double> values_;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
  double sigma_ = 0.0;
  double noise_density_dbw_per_hz_ = 0.0;
  double bandwidth_hz_ = 0.0;
  double g_max_ = 0.0;
  double rate_ = 0.0;
};

struct GainSample {
  std::uint64_t round = 0;
  std::vector<double> values;
};

// One independent draw per channel, consuming exactly one uniform per
// channel in channel order.
void SampleGainsInto(std::span<const ChannelDistribution> laws,
                     RandomStream& rng, std::span<double> out);

GainSample SampleGains(std::span<const ChannelDistribution> laws,
                       RandomStream& rng, std::uint64_t round);

}  // namespace swf

#endif  // SWF_CHANNELS_H_
