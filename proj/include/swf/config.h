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

#ifndef SWF_CONFIG_H_
#define SWF_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swf/channels.h"
#include "swf/harness.h"
#include "swf/model.h"
#include "swf/oracle.h"
#include "swf/policies.h"
#include "swf/rate_function.h"

namespace swf {

// Raised for malformed or invalid configuration. key_path names the
// offending entry ("scenario.channels[2].distribution.sigma"); line is set
// for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key_path, const std::string& message,
              std::optional<std::size_t> line = std::nullopt);

  const std::string& key_path() const { return key_path_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  std::string key_path_;
  std::optional<std::size_t> line_;
};

// Descriptor form of a channel law, as written in the file. For truncated
// Rayleigh laws an absent g_max means "p999": the 99.9th percentile of the
// gain of the largest-sigma channel in the scenario.
struct DistributionSpec {
  ChannelDistribution::Kind kind = ChannelDistribution::Kind::kDiscrete;
  std::vector<double> values;
  std::vector<double> probabilities;
  double sigma = 0.0;
  double noise_density_dbw_per_hz = 0.0;
  double bandwidth_hz = 0.0;
  std::optional<double> g_max;

  friend bool operator==(const DistributionSpec&,
                         const DistributionSpec&) = default;
};

struct TabulatedLevelSpec {
  PowerMw power_mw = 0;
  std::vector<double> xs;
  std::vector<double> ys;

  friend bool operator==(const TabulatedLevelSpec&,
                         const TabulatedLevelSpec&) = default;
};

struct ChannelSpec {
  std::vector<PowerMw> power_levels_mw;
  DistributionSpec distribution;
  // Only for the tabulated rate family: one curve per level.
  std::vector<TabulatedLevelSpec> rate_table;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

struct ScenarioSpec {
  PowerMw total_power_mw = 0;
  bool include_zero_allocation = true;
  RateFunction::Kind rate_function = RateFunction::Kind::kShannonLog;
  std::vector<ChannelSpec> channels;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

struct RunSpec {
  // A policy name, or "all" for every policy.
  std::string policy = "cwf1";
  Objective objective = Objective::kO1;
  std::uint64_t horizon = 100000;
  std::uint64_t master_seed = 1;
  std::size_t num_runs = 20;
  // Empty means the default geometric grid.
  std::vector<std::uint64_t> checkpoints;
  std::string rng = std::string(kGeneratorName);
  std::optional<std::size_t> exploration_l;
  ArgmaxMethod argmax = ArgmaxMethod::kExhaustive;
  unsigned threads = 0;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

struct OutputSpec {
  std::string directory = "out";
  std::vector<std::string> formats = {"csv"};

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct ConfigFile {
  ScenarioSpec scenario;
  RunSpec run;
  OutputSpec output;

  Scenario BuildScenario() const;
  std::vector<PolicyKind> Policies() const;
  PolicyOptions BuildPolicyOptions() const;
  RunConfig BuildRunConfig() const;

  friend bool operator==(const ConfigFile&, const ConfigFile&) = default;
};

// Resolves a scenario descriptor into laws and level sets ("p999" included).
Scenario BuildScenario(const ScenarioSpec& spec);

ConfigFile ParseConfig(std::string_view text);
ConfigFile LoadConfig(const std::filesystem::path& path);

// Canonical JSON (sorted keys, every field explicit). Parsing the result
// yields an equal ConfigFile.
std::string SerializeConfig(const ConfigFile& config);

}  // namespace swf

#endif  // SWF_CONFIG_H_
