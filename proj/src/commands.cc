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

#include "swf/commands.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>

#include "CLI11.hpp"
#include "swf/harness.h"
#include "swf/policies.h"

namespace swf {
namespace {

std::string JoinArms(const FeasibleSet& feasible,
                     const std::vector<ArmIndex>& arms) {
  std::string out;
  for (ArmIndex arm : arms) {
    if (!out.empty()) out += ' ';
    out += ToString(feasible.arm(arm));
  }
  return out;
}

std::string JoinIndices(const std::vector<ArmIndex>& arms) {
  std::string out;
  for (ArmIndex arm : arms) {
    if (!out.empty()) out += ' ';
    out += std::to_string(arm);
  }
  return out;
}

void PrintSolution(std::ostream& out, std::string_view prefix,
                   const FeasibleSet& feasible,
                   const ObjectiveSolution& solution) {
  out << prefix << ".optimum: " << FormatDouble(solution.optimum) << '\n';
  out << prefix
      << ".optimal_arms: " << JoinArms(feasible, solution.optimal_arms) << '\n';
  out << prefix
      << ".optimal_arm_indices: " << JoinIndices(solution.optimal_arms) << '\n';
  if (solution.gaps_defined) {
    out << prefix << ".gap_min: " << FormatDouble(solution.gap_min) << '\n';
    out << prefix << ".gap_max: " << FormatDouble(solution.gap_max) << '\n';
  } else {
    out << prefix << ".gap_min: undefined\n";
    out << prefix << ".gap_max: undefined\n";
  }
  for (const std::string& warning : solution.warnings) {
    out << prefix << ".warning: " << warning << '\n';
  }
}

std::vector<std::uint64_t> DefaultHorizons(std::uint64_t horizon) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 10; n < horizon; n *= 10) out.push_back(n);
  out.push_back(horizon);
  return out;
}

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> policy;
  std::optional<std::uint64_t> horizon;
  std::optional<std::size_t> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

void AddCommonFlags(CLI::App& command, CommonFlags& flags) {
  command.add_option("--config", flags.config_path, "Scenario config (JSON)")
      ->required();
  command.add_option("--policy", flags.policy, "cwf1, cwf2, ucb1, llr or all");
  command.add_option("--horizon", flags.horizon, "Rounds per run");
  command.add_option("--runs", flags.runs, "Independent runs");
  command.add_option("--seed", flags.seed, "Master seed");
  command.add_option("--out-dir", flags.out_dir, "Output directory");
}

ConfigFile LoadWithOverrides(const CommonFlags& flags) {
  ConfigFile config = LoadConfig(flags.config_path);
  if (flags.policy) {
    if (*flags.policy != "all" && !ParsePolicyKind(*flags.policy)) {
      throw ConfigError("--policy", "unknown policy '" + *flags.policy + "'");
    }
    config.run.policy = *flags.policy;
  }
  if (flags.horizon) {
    config.run.horizon = *flags.horizon;
    // An explicit schedule may not fit the new horizon.
    std::erase_if(config.run.checkpoints,
                  [&](std::uint64_t n) { return n > *flags.horizon; });
  }
  if (flags.runs) {
    if (*flags.runs == 0) throw ConfigError("--runs", "must be at least 1");
    config.run.num_runs = *flags.runs;
  }
  if (flags.seed) config.run.master_seed = *flags.seed;
  if (flags.out_dir) config.output.directory = *flags.out_dir;
  return config;
}

void WriteFile(const std::filesystem::path& path,
               std::vector<std::filesystem::path>& written,
               const std::function<void(std::ostream&)>& body) {
  written.push_back(path);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  body(file);
  file.close();
  if (!file) throw std::runtime_error("error writing " + path.string());
}

}  // namespace

void PrintEnumeration(std::ostream& out, const FeasibleSet& feasible,
                      bool list_arms) {
  out << "|F| = " << feasible.size() << ", L = " << feasible.max_support()
      << '\n';
  if (!list_arms) return;
  for (ArmIndex k = 0; k < feasible.size(); ++k) {
    out << k << ": " << ToString(feasible.arm(k)) << '\n';
  }
}

void PrintProfile(std::ostream& out, const Scenario& scenario,
                  const FeasibleSet& feasible, const Oracle& oracle,
                  const GapProfile& profile) {
  out << "num_channels: " << scenario.num_channels() << '\n';
  out << "num_arms: " << feasible.size() << '\n';
  out << "max_support: " << profile.max_support << '\n';
  out << "a_max: " << profile.a_max << '\n';
  out << "rate_function: " << ToString(scenario.rate().kind()) << '\n';
  for (std::size_t i = 0; i < scenario.num_channels(); ++i) {
    out << "channel_mean[" << i << "]: " << FormatDouble(oracle.means()[i])
        << '\n';
  }
  PrintSolution(out, "o1", feasible, profile.o1);
  PrintSolution(out, "o2", feasible, profile.o2);
  if (profile.b_min) {
    out << "b_min: " << FormatDouble(*profile.b_min) << '\n';
  } else {
    out << "b_min: undefined (" << profile.b_min_error << ")\n";
  }
  out << "pseudo_rate_condition: "
      << (PseudoRateIdentifiesOptimum(profile.o1, profile.o2) ? "satisfied"
                                                              : "violated")
      << '\n';
}

void PrintBounds(std::ostream& out, const FeasibleSet& feasible,
                 const GapProfile& profile,
                 const std::vector<std::uint64_t>& horizons) {
  const std::size_t n_channels = feasible.num_channels();
  const std::size_t l = profile.max_support;
  out << "N: " << n_channels << '\n';
  out << "L: " << l << '\n';
  out << "a_max: " << profile.a_max << '\n';
  const bool cwf1 = profile.o1.gaps_defined;
  const bool cwf2 = profile.b_min.has_value();
  if (cwf1) {
    out << "delta_min_o1: " << FormatDouble(profile.o1.gap_min) << '\n';
    out << "delta_max_o1: " << FormatDouble(profile.o1.gap_max) << '\n';
  } else {
    out << "cwf1_bound: unavailable: delta_min of O1 is undefined because "
           "every feasible arm is O1-optimal\n";
  }
  if (cwf2) {
    out << "b_min: " << FormatDouble(*profile.b_min) << '\n';
  } else {
    out << "cwf2_bound: unavailable: B_min could not be computed ("
        << profile.b_min_error << ")\n";
  }
  out << "n,cwf1_regret_bound,cwf2_t_non_bound,cwf2_regret_bound\n";
  for (std::uint64_t n : horizons) {
    out << n << ',';
    if (cwf1) out << FormatDouble(Cwf1RegretBound(profile, n_channels, l, n));
    out << ',';
    if (cwf2) {
      out << FormatDouble(Cwf2NonOptimalPlayBound(profile, n_channels, l, n));
    }
    out << ',';
    if (cwf2 && cwf1) {
      out << FormatDouble(Cwf2RegretBound(profile, n_channels, l, n));
    }
    out << '\n';
  }
}

std::vector<std::filesystem::path> WriteRunArtifacts(
    const ConfigFile& config, const std::filesystem::path& directory,
    std::ostream& log) {
  const Scenario scenario = config.BuildScenario();
  const FeasibleSet feasible = EnumerateFeasibleSet(scenario);
  const Oracle oracle(scenario, feasible);
  const PolicyOptions options = config.BuildPolicyOptions();
  const GapProfile profile = oracle.Profile(options.exploration_l);
  const RunConfig run = config.BuildRunConfig();

  std::vector<std::filesystem::path> written;
  try {
    std::filesystem::create_directories(directory);
    for (PolicyKind kind : config.Policies()) {
      const std::string name = ToString(kind);
      const std::vector<RunTrace> traces = RunAll(
          scenario, feasible, profile, kind, options, run, config.run.threads);
      const std::optional<PolicyBound> bound = BoundForPolicy(kind, profile);
      const BoundFunction bound_fn = bound ? bound->bound : BoundFunction();
      for (const RunTrace& trace : traces) {
        WriteFile(directory / ("trace_" + name + "_run" +
                               std::to_string(trace.run_index) + ".csv"),
                  written, [&](std::ostream& out) {
                    WriteTraceCsv(out, trace, bound_fn);
                  });
      }
      const Summary summary = Aggregate(traces);
      WriteFile(directory / ("aggregate_" + name + ".csv"), written,
                [&](std::ostream& out) {
                  WriteAggregateCsv(out, summary, bound_fn);
                });
      if (bound) {
        const BoundReport report =
            CompareBound(summary, bound->metric, bound->bound);
        WriteFile(directory / ("bound_" + name + ".csv"), written,
                  [&](std::ostream& out) { WriteBoundCsv(out, report); });
        if (report.any_exceeded) {
          log << name
              << ": empirical mean exceeds the bound at some "
                 "checkpoint\n";
        }
      }
      const SummaryRow& last = summary.rows.back();
      log << name << ": n = " << last.n << ", runs = " << last.runs
          << ", regret = " << FormatDouble(last.regret_mean)
          << ", t_non = " << FormatDouble(last.t_non_mean) << '\n';
    }
  } catch (...) {
    for (const auto& path : written) {
      std::error_code ignored;
      std::filesystem::remove(path, ignored);
    }
    throw;
  }
  return written;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Stochastic water-filling simulator", "swf"};
  app.require_subcommand(1);

  CommonFlags flags;
  bool list_arms = false;
  std::vector<std::uint64_t> horizons;

  CLI::App* enumerate = app.add_subcommand("enumerate", "List feasible arms");
  AddCommonFlags(*enumerate, flags);
  enumerate->add_flag("--list", list_arms, "Print every arm with its index");

  CLI::App* oracle = app.add_subcommand("oracle", "Print the gap profile");
  AddCommonFlags(*oracle, flags);

  CLI::App* run = app.add_subcommand("run", "Simulate policies, write CSVs");
  AddCommonFlags(*run, flags);

  CLI::App* bounds = app.add_subcommand("bounds", "Print theoretical bounds");
  AddCommonFlags(*bounds, flags);
  bounds->add_option("--n", horizons, "Horizons to evaluate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ConfigFile config = LoadWithOverrides(flags);
    if (run->parsed()) {
      WriteRunArtifacts(config, config.output.directory, out);
      return kExitOk;
    }
    const Scenario scenario = config.BuildScenario();
    const FeasibleSet feasible = EnumerateFeasibleSet(scenario);
    if (enumerate->parsed()) {
      PrintEnumeration(out, feasible, list_arms);
      return kExitOk;
    }
    const Oracle solver(scenario, feasible);
    const GapProfile profile =
        solver.Profile(config.BuildPolicyOptions().exploration_l);
    if (oracle->parsed()) {
      PrintProfile(out, scenario, feasible, solver, profile);
    } else {
      PrintBounds(
          out, feasible, profile,
          horizons.empty() ? DefaultHorizons(config.run.horizon) : horizons);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace swf
