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

// Project configuration: one JSON document covering every command. Loading
// validates each section against the owning module's preconditions and
// reports the offending field as a dotted path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <seisnet/cost.hpp>
#include <seisnet/crosslayer.hpp>
#include <seisnet/scenarios.hpp>
#include <seisnet/simulator.hpp>
#include <seisnet/topology.hpp>

namespace seisnet::app {

enum class OutputFormat { kJson, kText };

struct DesignSection {
  crosslayer::ParamRanges ranges = crosslayer::ParamRanges::single({});
  crosslayer::Objective objective = crosslayer::Objective::kMinBitrate;
  /// Defaults to the scenario's summed continuous stream rates.
  std::optional<BitsPerSecond> continuous_rate;
  /// Defaults to the scenario's first intermittent stream.
  std::optional<double> triggers_per_year;

  bool operator==(const DesignSection&) const = default;
};

struct PlanSection {
  topology::Architecture architecture = topology::Architecture::kHybrid;
  topology::Region region{40.0, 40.0};
  double node_spacing_km = 1.0;
  /// When non-empty, replaces the regular node grid.
  std::vector<topology::Point> explicit_nodes;
  double gateway_spacing_km = 6.0;
  BitsPerSecond per_node_uplink = 10770.0;
  double max_link_distance_km = 6.0;
  BitsPerSecond gateway_capacity = 1e6;
  std::vector<topology::Point> wired_sites;

  bool operator==(const PlanSection&) const = default;
};

struct CostOption {
  std::string name;
  cost::CostModel model;
  /// Take node_count from the plan's node layout.
  bool nodes_from_plan = false;
  /// Take gateway_count from the area-ratio gateway estimate.
  bool gateways_from_plan = false;

  bool operator==(const CostOption&) const = default;
};

struct SimulationSection {
  Bytes frame_len = 128;
  double frame_efficiency = 0.9;
  double split_ratio = 1.0;
  double duty_cycle = 0.01;
  BitsPerSecond bitrate = 10770.0;
  BitsPerSecond continuous_rate = 0.0;
  double triggers_per_year = 0.0;
  Bytes trigger_payload = 216000;
  double frame_error_rate = 0.0;
  simulator::RetransmissionMode mode = simulator::RetransmissionMode::kSingleRetry;
  Seconds duration = kSecondsPerDay;
  std::size_t node_count = 16;
  std::vector<simulator::Injection> injections;
  bool drain = false;
  std::int64_t max_drain_cycles = 10'000'000;
  /// t_D2 carried into the analytical comparison's design point.
  Seconds tolerable_delay = 36000.0;
  unsigned threads = 0;

  bool operator==(const SimulationSection&) const = default;
};

struct ProjectConfig {
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::kJson;
  scenarios::ScenarioProfile scenario;
  DesignSection design;
  std::vector<crosslayer::TechnologyEntry> catalog;
  PlanSection plan;
  std::vector<CostOption> costs;
  SimulationSection simulation;

  bool operator==(const ProjectConfig&) const = default;
};

/// Parses and validates. Throws ValidationError with the field path.
ProjectConfig config_from_json(const nlohmann::json& doc);
/// Full serialization; config_from_json(config_to_json(c)) == c.
nlohmann::json config_to_json(const ProjectConfig& config);

ProjectConfig load_config_file(const std::string& path);

/// Checks cross-module preconditions. Throws ValidationError.
void validate(const ProjectConfig& config);

/// Built-in presets:
///   groningen          design point eta 0.9, L_D2 216 kB, L_f 128 B,
///                      lambda 0.01, rho 1, t_D2 10 h, delta 0.01
///   groningen-1h       same with t_D2 = 1 h
///   groningen-table3   the full low/mid/high design grid
std::vector<std::string> preset_names();
ProjectConfig preset(const std::string& name);

/// simulator::SimConfig for the simulation section (seed from the config).
simulator::SimConfig make_sim_config(const ProjectConfig& config);
/// Design point matching the simulation section, for the analytical check.
crosslayer::DesignParams sim_design_params(const ProjectConfig& config);

/// FNV-1a 64 of the canonical (sorted-key, compact) JSON serialization.
std::uint64_t config_hash(const ProjectConfig& config);

}  // namespace seisnet::app
