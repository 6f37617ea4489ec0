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

#ifndef SWF_COMMANDS_H_
#define SWF_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <vector>

#include "swf/config.h"
#include "swf/model.h"
#include "swf/oracle.h"

namespace swf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

// Entry point of the `swf` tool: enumerate | oracle | run | bounds.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// "|F| = 140, L = 4", then one "index: allocation" line per arm if asked.
void PrintEnumeration(std::ostream& out, const FeasibleSet& feasible,
                      bool list_arms);

// One "key: value" line per entry, in a fixed order.
void PrintProfile(std::ostream& out, const Scenario& scenario,
                  const FeasibleSet& feasible, const Oracle& oracle,
                  const GapProfile& profile);

void PrintBounds(std::ostream& out, const FeasibleSet& feasible,
                 const GapProfile& profile,
                 const std::vector<std::uint64_t>& horizons);

// Runs every configured policy and writes trace_<policy>_run<k>.csv,
// aggregate_<policy>.csv and, when the policy has a bound,
// bound_<policy>.csv into `directory`. Returns the files written. Files
// from a failed invocation are removed before the error propagates.
std::vector<std::filesystem::path> WriteRunArtifacts(
    const ConfigFile& config, const std::filesystem::path& directory,
    std::ostream& log);

}  // namespace swf

#endif  // SWF_COMMANDS_H_
