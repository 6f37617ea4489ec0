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

#include "swf/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace swf {
namespace {

using Json = nlohmann::json;

std::string Child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string Item(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

// Walks one JSON object, remembering which keys were consumed so that
// leftovers can be rejected.
class ObjectReader {
 public:
  ObjectReader(const Json& json, std::string path)
      : json_(json), path_(std::move(path)) {
    if (!json_.is_object()) {
      throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }
  }

  const Json* Optional(std::string_view key) {
    seen_.insert(std::string(key));
    const auto it = json_.find(std::string(key));
    return it == json_.end() ? nullptr : &*it;
  }

  const Json& Required(std::string_view key) {
    const Json* value = Optional(key);
    if (value == nullptr) throw ConfigError(Path(key), "missing required key");
    return *value;
  }

  std::string Path(std::string_view key) const { return Child(path_, key); }

  void Finish() const {
    for (const auto& [key, value] : json_.items()) {
      if (!seen_.contains(key)) throw ConfigError(Path(key), "unknown key");
    }
  }

 private:
  const Json& json_;
  std::string path_;
  std::set<std::string> seen_;
};

double AsDouble(const Json& json, const std::string& path) {
  if (!json.is_number()) throw ConfigError(path, "expected a number");
  const double value = json.get<double>();
  if (!std::isfinite(value))
    throw ConfigError(path, "expected a finite number");
  return value;
}

std::uint64_t AsUint(const Json& json, const std::string& path) {
  if (json.is_number_unsigned()) return json.get<std::uint64_t>();
  if (json.is_number_integer()) {
    throw ConfigError(path, "expected a nonnegative integer");
  }
  const double value = AsDouble(json, path);
  if (value < 0.0 || value != std::floor(value) || value > 0x1.0p63) {
    throw ConfigError(path, "expected a nonnegative integer");
  }
  return static_cast<std::uint64_t>(value);
}

std::string AsString(const Json& json, const std::string& path) {
  if (!json.is_string()) throw ConfigError(path, "expected a string");
  return json.get<std::string>();
}

bool AsBool(const Json& json, const std::string& path) {
  if (!json.is_boolean()) throw ConfigError(path, "expected true or false");
  return json.get<bool>();
}

const Json& AsArray(const Json& json, const std::string& path) {
  if (!json.is_array()) throw ConfigError(path, "expected an array");
  return json;
}

std::vector<double> DoubleArray(const Json& json, const std::string& path) {
  std::vector<double> out;
  const Json& array = AsArray(json, path);
  for (std::size_t k = 0; k < array.size(); ++k) {
    out.push_back(AsDouble(array[k], Item(path, k)));
  }
  return out;
}

DistributionSpec ParseDistribution(const Json& json, const std::string& path) {
  ObjectReader reader(json, path);
  DistributionSpec spec;
  const std::string kind =
      AsString(reader.Required("kind"), reader.Path("kind"));
  if (kind == "discrete") {
    spec.kind = ChannelDistribution::Kind::kDiscrete;
    spec.values = DoubleArray(reader.Required("values"), reader.Path("values"));
    spec.probabilities = DoubleArray(reader.Required("probabilities"),
                                     reader.Path("probabilities"));
  } else if (kind == "truncated_rayleigh") {
    spec.kind = ChannelDistribution::Kind::kTruncatedRayleigh;
    spec.sigma = AsDouble(reader.Required("sigma"), reader.Path("sigma"));
    spec.noise_density_dbw_per_hz =
        AsDouble(reader.Required("noise_density_dbw_per_hz"),
                 reader.Path("noise_density_dbw_per_hz"));
    spec.bandwidth_hz =
        AsDouble(reader.Required("bandwidth_hz"), reader.Path("bandwidth_hz"));
    if (const Json* g_max = reader.Optional("g_max")) {
      if (g_max->is_string()) {
        if (g_max->get<std::string>() != "p999") {
          throw ConfigError(reader.Path("g_max"),
                            "expected a number or \"p999\"");
        }
      } else {
        spec.g_max = AsDouble(*g_max, reader.Path("g_max"));
      }
    }
  } else {
    throw ConfigError(reader.Path("kind"),
                      "unknown distribution kind '" + kind +
                          "' (expected discrete or truncated_rayleigh)");
  }
  reader.Finish();
  return spec;
}

std::vector<TabulatedLevelSpec> ParseRateTable(const Json& json,
                                               const std::string& path) {
  std::vector<TabulatedLevelSpec> table;
  const Json& array = AsArray(json, path);
  for (std::size_t k = 0; k < array.size(); ++k) {
    const std::string item = Item(path, k);
    ObjectReader reader(array[k], item);
    TabulatedLevelSpec level;
    level.power_mw = static_cast<PowerMw>(
        AsUint(reader.Required("power_mw"), reader.Path("power_mw")));
    const std::string knots_path = reader.Path("knots");
    const Json& knots = AsArray(reader.Required("knots"), knots_path);
    for (std::size_t j = 0; j < knots.size(); ++j) {
      const std::string knot_path = Item(knots_path, j);
      const Json& knot = AsArray(knots[j], knot_path);
      if (knot.size() != 2) throw ConfigError(knot_path, "expected [x, rate]");
      level.xs.push_back(AsDouble(knot[0], Item(knot_path, 0)));
      level.ys.push_back(AsDouble(knot[1], Item(knot_path, 1)));
    }
    reader.Finish();
    table.push_back(std::move(level));
  }
  return table;
}

ScenarioSpec ParseScenario(const Json& json, const std::string& path) {
  ObjectReader reader(json, path);
  ScenarioSpec spec;
  spec.total_power_mw = static_cast<PowerMw>(
      AsUint(reader.Required("total_power_mw"), reader.Path("total_power_mw")));
  if (const Json* zero = reader.Optional("include_zero_allocation")) {
    spec.include_zero_allocation =
        AsBool(*zero, reader.Path("include_zero_allocation"));
  }
  if (const Json* rate = reader.Optional("rate_function")) {
    const std::string name = AsString(*rate, reader.Path("rate_function"));
    if (name == "shannon_log") {
      spec.rate_function = RateFunction::Kind::kShannonLog;
    } else if (name == "tabulated") {
      spec.rate_function = RateFunction::Kind::kTabulated;
    } else {
      throw ConfigError(reader.Path("rate_function"),
                        "unknown rate function '" + name +
                            "' (expected shannon_log or tabulated)");
    }
  }
  const std::string channels_path = reader.Path("channels");
  const Json& channels = AsArray(reader.Required("channels"), channels_path);
  if (channels.empty())
    throw ConfigError(channels_path, "need at least one channel");
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const std::string item = Item(channels_path, i);
    ObjectReader channel_reader(channels[i], item);
    ChannelSpec channel;
    const std::string levels_path = channel_reader.Path("power_levels_mw");
    const Json& levels =
        AsArray(channel_reader.Required("power_levels_mw"), levels_path);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const std::uint64_t power = AsUint(levels[k], Item(levels_path, k));
      if (power == 0) {
        throw ConfigError(Item(levels_path, k),
                          "power levels must be positive");
      }
      channel.power_levels_mw.push_back(static_cast<PowerMw>(power));
    }
    if (channel.power_levels_mw.empty()) {
      throw ConfigError(levels_path, "need at least one power level");
    }
    channel.distribution =
        ParseDistribution(channel_reader.Required("distribution"),
                          channel_reader.Path("distribution"));
    if (const Json* table = channel_reader.Optional("rate_table")) {
      if (spec.rate_function != RateFunction::Kind::kTabulated) {
        throw ConfigError(channel_reader.Path("rate_table"),
                          "rate_table requires rate_function = tabulated");
      }
      channel.rate_table =
          ParseRateTable(*table, channel_reader.Path("rate_table"));
    } else if (spec.rate_function == RateFunction::Kind::kTabulated) {
      throw ConfigError(channel_reader.Path("rate_table"),
                        "missing required key for the tabulated rate function");
    }
    channel_reader.Finish();
    spec.channels.push_back(std::move(channel));
  }
  reader.Finish();
  return spec;
}

RunSpec ParseRun(const Json& json, const std::string& path) {
  ObjectReader reader(json, path);
  RunSpec spec;
  if (const Json* policy = reader.Optional("policy")) {
    spec.policy = AsString(*policy, reader.Path("policy"));
    if (spec.policy != "all" && !ParsePolicyKind(spec.policy)) {
      throw ConfigError(reader.Path("policy"),
                        "unknown policy '" + spec.policy +
                            "' (expected cwf1, cwf2, ucb1, llr or all)");
    }
  }
  if (const Json* objective = reader.Optional("objective")) {
    const std::string name = AsString(*objective, reader.Path("objective"));
    if (name == "o1") {
      spec.objective = Objective::kO1;
    } else if (name == "o2") {
      spec.objective = Objective::kO2;
    } else {
      throw ConfigError(reader.Path("objective"), "expected o1 or o2");
    }
  }
  if (const Json* horizon = reader.Optional("horizon")) {
    spec.horizon = AsUint(*horizon, reader.Path("horizon"));
  }
  if (const Json* seed = reader.Optional("master_seed")) {
    spec.master_seed = AsUint(*seed, reader.Path("master_seed"));
  }
  if (const Json* runs = reader.Optional("num_runs")) {
    spec.num_runs = AsUint(*runs, reader.Path("num_runs"));
    if (spec.num_runs == 0) {
      throw ConfigError(reader.Path("num_runs"), "must be at least 1");
    }
  }
  if (const Json* checkpoints = reader.Optional("checkpoints")) {
    const std::string cp_path = reader.Path("checkpoints");
    if (checkpoints->is_string()) {
      if (checkpoints->get<std::string>() != "geometric") {
        throw ConfigError(cp_path, "expected \"geometric\" or a list");
      }
    } else {
      const Json& array = AsArray(*checkpoints, cp_path);
      for (std::size_t k = 0; k < array.size(); ++k) {
        spec.checkpoints.push_back(AsUint(array[k], Item(cp_path, k)));
      }
    }
  }
  if (const Json* rng = reader.Optional("rng")) {
    spec.rng = AsString(*rng, reader.Path("rng"));
    if (spec.rng != kGeneratorName) {
      throw ConfigError(reader.Path("rng"),
                        "unsupported generator '" + spec.rng + "' (expected " +
                            std::string(kGeneratorName) + ")");
    }
  }
  if (const Json* l = reader.Optional("exploration_l")) {
    if (!l->is_null()) {
      spec.exploration_l = AsUint(*l, reader.Path("exploration_l"));
      if (*spec.exploration_l == 0) {
        throw ConfigError(reader.Path("exploration_l"), "must be at least 1");
      }
    }
  }
  if (const Json* argmax = reader.Optional("argmax")) {
    const std::string name = AsString(*argmax, reader.Path("argmax"));
    const auto method = ParseArgmaxMethod(name);
    if (!method) {
      throw ConfigError(reader.Path("argmax"),
                        "expected exhaustive or knapsack");
    }
    spec.argmax = *method;
  }
  if (const Json* threads = reader.Optional("threads")) {
    spec.threads =
        static_cast<unsigned>(AsUint(*threads, reader.Path("threads")));
  }
  reader.Finish();
  return spec;
}

OutputSpec ParseOutput(const Json& json, const std::string& path) {
  ObjectReader reader(json, path);
  OutputSpec spec;
  if (const Json* directory = reader.Optional("directory")) {
    spec.directory = AsString(*directory, reader.Path("directory"));
  }
  if (const Json* formats = reader.Optional("formats")) {
    const std::string formats_path = reader.Path("formats");
    const Json& array = AsArray(*formats, formats_path);
    spec.formats.clear();
    for (std::size_t k = 0; k < array.size(); ++k) {
      const std::string format = AsString(array[k], Item(formats_path, k));
      if (format != "csv") {
        throw ConfigError(Item(formats_path, k),
                          "unsupported format '" + format + "' (only csv)");
      }
      spec.formats.push_back(format);
    }
  }
  reader.Finish();
  return spec;
}

std::size_t LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

Json ToJson(const DistributionSpec& spec) {
  Json out;
  if (spec.kind == ChannelDistribution::Kind::kDiscrete) {
    out["kind"] = "discrete";
    out["values"] = spec.values;
    out["probabilities"] = spec.probabilities;
  } else {
    out["kind"] = "truncated_rayleigh";
    out["sigma"] = spec.sigma;
    out["noise_density_dbw_per_hz"] = spec.noise_density_dbw_per_hz;
    out["bandwidth_hz"] = spec.bandwidth_hz;
    if (spec.g_max) {
      out["g_max"] = *spec.g_max;
    } else {
      out["g_max"] = "p999";
    }
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(std::string key_path, const std::string& message,
                         std::optional<std::size_t> line)
    : std::runtime_error(
          (line ? "line " + std::to_string(*line) + ": " : std::string()) +
          key_path + ": " + message),
      key_path_(std::move(key_path)),
      line_(line) {}

Scenario BuildScenario(const ScenarioSpec& spec) {
  // "p999" resolves against the channel with the largest sigma.
  std::optional<double> p999;
  double largest_sigma = -1.0;
  for (const ChannelSpec& channel : spec.channels) {
    const DistributionSpec& law = channel.distribution;
    if (law.kind == ChannelDistribution::Kind::kTruncatedRayleigh &&
        law.sigma > largest_sigma) {
      largest_sigma = law.sigma;
      p999 = RayleighGainQuantile(law.sigma, law.noise_density_dbw_per_hz,
                                  law.bandwidth_hz, kDefaultGMaxQuantile);
    }
  }

  std::vector<ChannelConfig> channels;
  std::vector<std::map<PowerMw, TabulatedCurve>> tables;
  for (std::size_t i = 0; i < spec.channels.size(); ++i) {
    const ChannelSpec& channel = spec.channels[i];
    const std::string path = "scenario.channels[" + std::to_string(i) + "]";
    const DistributionSpec& law = channel.distribution;
    try {
      ChannelDistribution distribution =
          law.kind == ChannelDistribution::Kind::kDiscrete
              ? ChannelDistribution::Discrete(law.values, law.probabilities)
              : ChannelDistribution::TruncatedRayleigh(
                    law.sigma, law.noise_density_dbw_per_hz, law.bandwidth_hz,
                    law.g_max.value_or(p999.value_or(0.0)));
      channels.push_back({channel.power_levels_mw, std::move(distribution)});
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path + ".distribution", e.what());
    }
    if (spec.rate_function == RateFunction::Kind::kTabulated) {
      std::map<PowerMw, TabulatedCurve> curves;
      for (std::size_t k = 0; k < channel.rate_table.size(); ++k) {
        const TabulatedLevelSpec& level = channel.rate_table[k];
        try {
          curves.emplace(level.power_mw, TabulatedCurve(level.xs, level.ys));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(path + ".rate_table[" + std::to_string(k) + "]",
                            e.what());
        }
      }
      tables.push_back(std::move(curves));
    }
  }
  RateFunction rate = spec.rate_function == RateFunction::Kind::kShannonLog
                          ? RateFunction::ShannonLog()
                          : RateFunction::Tabulated(std::move(tables));
  try {
    return Scenario(std::move(channels), spec.total_power_mw, std::move(rate),
                    spec.include_zero_allocation);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("scenario", e.what());
  }
}

Scenario ConfigFile::BuildScenario() const {
  return swf::BuildScenario(scenario);
}

std::vector<PolicyKind> ConfigFile::Policies() const {
  if (run.policy == "all") {
    return {std::begin(kAllPolicies), std::end(kAllPolicies)};
  }
  const auto kind = ParsePolicyKind(run.policy);
  if (!kind)
    throw ConfigError("run.policy", "unknown policy '" + run.policy + "'");
  return {*kind};
}

PolicyOptions ConfigFile::BuildPolicyOptions() const {
  PolicyOptions options;
  options.exploration_l = run.exploration_l;
  options.argmax = run.argmax;
  return options;
}

RunConfig ConfigFile::BuildRunConfig() const {
  RunConfig config;
  config.objective = run.objective;
  config.horizon = run.horizon;
  config.master_seed = run.master_seed;
  config.num_runs = run.num_runs;
  config.checkpoints = run.checkpoints.empty() ? DefaultCheckpoints(run.horizon)
                                               : run.checkpoints;
  return config;
}

ConfigFile ParseConfig(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError("<root>", e.what(), LineOf(text, e.byte));
  }
  ObjectReader reader(root, "");
  ConfigFile config;
  config.scenario = ParseScenario(reader.Required("scenario"), "scenario");
  if (const Json* run = reader.Optional("run")) {
    config.run = ParseRun(*run, "run");
  }
  if (const Json* output = reader.Optional("output")) {
    config.output = ParseOutput(*output, "output");
  }
  reader.Finish();
  return config;
}

ConfigFile LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string SerializeConfig(const ConfigFile& config) {
  Json scenario;
  scenario["total_power_mw"] = config.scenario.total_power_mw;
  scenario["include_zero_allocation"] = config.scenario.include_zero_allocation;
  scenario["rate_function"] = ToString(config.scenario.rate_function);
  scenario["channels"] = Json::array();
  for (const ChannelSpec& channel : config.scenario.channels) {
    Json item;
    item["power_levels_mw"] = channel.power_levels_mw;
    item["distribution"] = ToJson(channel.distribution);
    if (config.scenario.rate_function == RateFunction::Kind::kTabulated) {
      item["rate_table"] = Json::array();
      for (const TabulatedLevelSpec& level : channel.rate_table) {
        Json knots = Json::array();
        for (std::size_t k = 0; k < level.xs.size(); ++k) {
          knots.push_back({level.xs[k], level.ys[k]});
        }
        item["rate_table"].push_back(
            {{"power_mw", level.power_mw}, {"knots", knots}});
      }
    }
    scenario["channels"].push_back(item);
  }

  Json run;
  run["policy"] = config.run.policy;
  run["objective"] = ToString(config.run.objective);
  run["horizon"] = config.run.horizon;
  run["master_seed"] = config.run.master_seed;
  run["num_runs"] = config.run.num_runs;
  if (config.run.checkpoints.empty()) {
    run["checkpoints"] = "geometric";
  } else {
    run["checkpoints"] = config.run.checkpoints;
  }
  run["rng"] = config.run.rng;
  if (config.run.exploration_l) {
    run["exploration_l"] = *config.run.exploration_l;
  } else {
    run["exploration_l"] = nullptr;
  }
  run["argmax"] = ToString(config.run.argmax);
  run["threads"] = config.run.threads;

  Json output;
  output["directory"] = config.output.directory;
  output["formats"] = config.output.formats;

  Json root;
  root["scenario"] = scenario;
  root["run"] = run;
  root["output"] = output;
  return root.dump(2) + "\n";
}

}  // namespace swf
