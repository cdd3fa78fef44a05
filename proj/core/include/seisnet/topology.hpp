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

// Node and gateway layouts for the two network architectures:
//   cellular - nodes reach operator towers directly; cells act as clusters.
//   hybrid   - nodes reach private concentrators (cluster heads) that
//              forward over cellular, satellite or a recording truck.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <seisnet/units.hpp>

namespace seisnet::topology {

struct Region {
  double width_km = 0.0;
  double height_km = 0.0;

  void validate() const;
  bool operator==(const Region&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b) noexcept;

enum class LayoutSource { kGrid, kExplicit };

struct NodeLayout {
  std::vector<Point> positions;
  double spacing_km = 0.0;
  LayoutSource source = LayoutSource::kGrid;
};

/// Regular row-major grid of ceil(w/s) x ceil(h/s) nodes, first node at
/// (s/2, s/2). Coordinates past the region edge are clamped onto it.
/// Throws kPrecondition unless 0 < spacing <= min(width, height).
NodeLayout grid_nodes(const Region& region, double spacing_km);

/// Explicit positions; throws kPrecondition if any lies outside the region.
NodeLayout explicit_nodes(const Region& region, std::vector<Point> positions);

/// ceil((w/s) * (h/s)): the ceiling of the area ratio, which can be smaller
/// than the number of sites on a physical grid, ceil(w/s) * ceil(h/s).
std::int64_t gateway_count(const Region& region, double gateway_spacing_km);

enum class Architecture { kCellular, kHybrid };

const char* to_string(Architecture a) noexcept;

struct Gateway {
  Point position;
  /// Wired backhaul (e.g. a borehole site with a DSL line); carries no
  /// wireless-gateway cost.
  bool wired = false;
};

struct PlanInputs {
  Architecture architecture = Architecture::kHybrid;
  double gateway_spacing_km = 6.0;
  BitsPerSecond per_node_uplink = 0.0;
  double max_link_distance_km = 0.0;
  BitsPerSecond gateway_capacity = 0.0;
  std::vector<Point> wired_sites;
};

struct NetworkPlan {
  Architecture architecture = Architecture::kHybrid;
  Region region;
  NodeLayout nodes;
  std::vector<Gateway> gateways;
  /// Gateway index per node; empty for nodes beyond max_link_distance.
  std::vector<std::optional<std::size_t>> assignment;
  std::vector<double> link_distance_km;
  std::vector<BitsPerSecond> per_gateway_load;
  std::vector<std::size_t> per_gateway_nodes;
  std::vector<std::size_t> uncovered;
  std::vector<std::size_t> overloaded;
  double max_link_distance_km = 0.0;
  BitsPerSecond gateway_capacity = 0.0;
  /// gateway_count() for the same region and spacing.
  std::int64_t formula_gateway_count = 0;
  std::vector<std::string> notes;

  std::size_t wireless_gateway_count() const noexcept;
  BitsPerSecond total_load() const noexcept;
};

/// Places a physical grid of gateways at `gateway_spacing_km` (plus any
/// wired sites, appended in input order) and assigns each node to its nearest
/// gateway, ties to the lower index. Nodes out of range and gateways above
/// capacity are reported in the plan, not thrown.
NetworkPlan plan_network(const Region& region, const NodeLayout& nodes,
                         const PlanInputs& inputs);

}  // namespace seisnet::topology
