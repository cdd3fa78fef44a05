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

#include <seisnet/topology.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <seisnet/error.hpp>

namespace seisnet::topology {

using detail::fail;
using detail::require;

void Region::validate() const {
  require(std::isfinite(width_km) && width_km > 0.0 && std::isfinite(height_km) &&
              height_km > 0.0,
          ErrorCode::kPrecondition, "region width and height must be positive");
}

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

// Grid coordinates along one side; a single site sits mid-side when the
// spacing exceeds the side length.
std::vector<double> axis_sites(double length, double spacing) {
  if (spacing >= length) return {std::min(spacing / 2.0, length / 2.0)};
  const auto n = static_cast<std::size_t>(snapped_ceil(length / spacing));
  std::vector<double> sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    sites[i] = std::min(spacing / 2.0 + static_cast<double>(i) * spacing, length);
  }
  return sites;
}

std::vector<Point> grid_points(const Region& region, double spacing) {
  const auto xs = axis_sites(region.width_km, spacing);
  const auto ys = axis_sites(region.height_km, spacing);
  std::vector<Point> pts;
  pts.reserve(xs.size() * ys.size());
  for (double y : ys) {
    for (double x : xs) pts.push_back({x, y});
  }
  return pts;
}

bool inside(const Region& r, Point p) {
  return p.x >= 0.0 && p.y >= 0.0 && p.x <= r.width_km && p.y <= r.height_km;
}

}  // namespace

NodeLayout grid_nodes(const Region& region, double spacing_km) {
  region.validate();
  require(spacing_km > 0.0 && spacing_km <= std::min(region.width_km, region.height_km),
          ErrorCode::kPrecondition,
          "node spacing must be positive and no larger than the region");
  return NodeLayout{grid_points(region, spacing_km), spacing_km, LayoutSource::kGrid};
}

NodeLayout explicit_nodes(const Region& region, std::vector<Point> positions) {
  region.validate();
  for (const auto& p : positions) {
    require(inside(region, p), ErrorCode::kPrecondition, "node position outside region");
  }
  return NodeLayout{std::move(positions), 0.0, LayoutSource::kExplicit};
}

std::int64_t gateway_count(const Region& region, double gateway_spacing_km) {
  region.validate();
  require(std::isfinite(gateway_spacing_km) && gateway_spacing_km > 0.0,
          ErrorCode::kPrecondition, "gateway spacing must be positive");
  const double cells = (region.width_km / gateway_spacing_km) *
                       (region.height_km / gateway_spacing_km);
  return std::max<std::int64_t>(1, snapped_ceil(cells));
}

const char* to_string(Architecture a) noexcept {
  return a == Architecture::kCellular ? "cellular" : "hybrid";
}

std::size_t NetworkPlan::wireless_gateway_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gateways.begin(), gateways.end(), [](const Gateway& g) { return !g.wired; }));
}

BitsPerSecond NetworkPlan::total_load() const noexcept {
  return std::accumulate(per_gateway_load.begin(), per_gateway_load.end(), 0.0);
}

NetworkPlan plan_network(const Region& region, const NodeLayout& nodes,
                         const PlanInputs& in) {
  region.validate();
  require(in.per_node_uplink >= 0.0 && std::isfinite(in.per_node_uplink),
          ErrorCode::kPrecondition, "per-node uplink must be non-negative");
  require(in.max_link_distance_km > 0.0, ErrorCode::kPrecondition,
          "max link distance must be positive");
  require(in.gateway_capacity >= 0.0, ErrorCode::kPrecondition,
          "gateway capacity must be non-negative");

  NetworkPlan plan;
  plan.architecture = in.architecture;
  plan.region = region;
  plan.nodes = nodes;
  plan.max_link_distance_km = in.max_link_distance_km;
  plan.gateway_capacity = in.gateway_capacity;
  plan.formula_gateway_count = gateway_count(region, in.gateway_spacing_km);

  for (const auto& p : grid_points(region, in.gateway_spacing_km)) {
    plan.gateways.push_back({p, false});
  }
  const auto grid_gateways = static_cast<std::int64_t>(plan.gateways.size());
  for (const auto& p : in.wired_sites) {
    require(inside(region, p), ErrorCode::kPrecondition, "wired site outside region");
    plan.gateways.push_back({p, true});
  }

  const std::size_t n_nodes = nodes.positions.size();
  const std::size_t n_gw = plan.gateways.size();
  plan.assignment.assign(n_nodes, std::nullopt);
  plan.link_distance_km.assign(n_nodes, std::numeric_limits<double>::infinity());
  plan.per_gateway_load.assign(n_gw, 0.0);
  plan.per_gateway_nodes.assign(n_gw, 0);

  for (std::size_t i = 0; i < n_nodes; ++i) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < n_gw; ++g) {
      const double d = distance(nodes.positions[i], plan.gateways[g].position);
      if (d < best_d) {
        best_d = d;
        best = g;
      }
    }
    plan.link_distance_km[i] = best_d;
    if (best_d <= in.max_link_distance_km) {
      plan.assignment[i] = best;
      plan.per_gateway_load[best] += in.per_node_uplink;
      ++plan.per_gateway_nodes[best];
    } else {
      plan.uncovered.push_back(i);
    }
  }
  for (std::size_t g = 0; g < n_gw; ++g) {
    if (plan.per_gateway_load[g] > in.gateway_capacity ||
        (in.gateway_capacity == 0.0 && plan.per_gateway_nodes[g] > 0)) {
      plan.overloaded.push_back(g);
    }
  }

  if (grid_gateways != plan.formula_gateway_count) {
    plan.notes.push_back("physical gateway grid has " + std::to_string(grid_gateways) +
                         " sites; the area-ratio estimate ceil((w/s)(h/s)) gives " +
                         std::to_string(plan.formula_gateway_count));
  }
  if (in.architecture == Architecture::kHybrid) {
    plan.notes.push_back(
        "hybrid backhaul from concentrators (truck, satellite or extra masts) is not modelled");
  }
  if (!plan.uncovered.empty()) {
    plan.notes.push_back(std::to_string(plan.uncovered.size()) +
                         " node(s) beyond the maximum link distance");
  }
  if (!plan.overloaded.empty()) {
    plan.notes.push_back(std::to_string(plan.overloaded.size()) +
                         " gateway(s) above capacity");
  }
  return plan;
}

}  // namespace seisnet::topology
