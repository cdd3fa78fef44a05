// Copyright 2026 The seisnet Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include <seisnet/app/config.hpp>
#include <seisnet/app/report.hpp>

namespace seisnet::app {

enum class ExitCode : int {
  kOk = 0,
  kInfeasibleDesign = 1,
  kValidation = 2,
  kInternal = 3,
};

struct CommandResult {
  Report report;
  ExitCode exit_code = ExitCode::kOk;
};

/// Per-stream rates, per-sensor yearly volumes and network totals.
CommandResult cmd_rates(const ProjectConfig& config);

/// Design search. Exit code kInfeasibleDesign when no candidate passes; the
/// report then carries a per-candidate diagnosis.
CommandResult cmd_design(const ProjectConfig& config);

/// Topology plan plus one cost row per configured option.
CommandResult cmd_plan(const ProjectConfig& config);

/// Simulation with the analytical delay comparison and buffer estimate.
/// When `trace` is non-null the per-frame trace is written to it as CSV.
CommandResult cmd_simulate(const ProjectConfig& config, std::ostream* trace = nullptr);

/// Dispatch by subcommand name; throws ValidationError for unknown names.
CommandResult run_command(const std::string& name, const ProjectConfig& config,
                          std::ostream* trace = nullptr);

}  // namespace seisnet::app
