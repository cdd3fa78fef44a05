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

#include <seisnet/app/config.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <sstream>

#include <seisnet/error.hpp>

namespace seisnet::app {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw ValidationError(path, msg);
}

// Typed field access over one JSON object. Unknown keys are rejected so that
// typos surface as errors instead of silently falling back to defaults.
class Fields {
 public:
  Fields(const json& obj, std::string path, std::initializer_list<const char*> known)
      : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) invalid(path_.empty() ? "<root>" : path_, "expected an object");
    for (const auto& [key, value] : obj_.items()) {
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok) invalid(join(path_, key), "unknown field");
    }
  }

  bool has(const char* key) const { return obj_.contains(key); }
  std::string path(const char* key) const { return join(path_, key); }
  const json& at(const char* key) const { return obj_.at(key); }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_number()) invalid(path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) invalid(path(key), "expected a finite number");
    return d;
  }

  std::int64_t integer(const char* key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (std::isfinite(d) && std::trunc(d) == d && std::abs(d) < 9e15) {
        return static_cast<std::int64_t>(d);
      }
    }
    invalid(path(key), "expected an integer");
  }

  std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    invalid(path(key), "expected a non-negative integer");
  }

  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_boolean()) invalid(path(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const auto& v = obj_.at(key);
    if (!v.is_string()) invalid(path(key), "expected a string");
    return v.get<std::string>();
  }

  template <typename Enum>
  Enum choice(const char* key, Enum fallback,
              std::initializer_list<std::pair<const char*, Enum>> options) const {
    if (!has(key)) return fallback;
    const std::string s = string(key, "");
    std::string allowed;
    for (const auto& [name, value] : options) {
      if (s == name) return value;
      allowed += allowed.empty() ? name : std::string(", ") + name;
    }
    invalid(path(key), "expected one of: " + allowed);
  }

 private:
  const json& obj_;
  std::string path_;
};

const json& array_at(const Fields& f, const char* key) {
  const auto& v = f.at(key);
  if (!v.is_array()) invalid(f.path(key), "expected an array");
  return v;
}

// Enum <-> string tables.
const std::initializer_list<std::pair<const char*, scenarios::StreamKind>> kStreamKinds = {
    {"continuous", scenarios::StreamKind::kContinuous},
    {"intermittent", scenarios::StreamKind::kIntermittent}};
const std::initializer_list<std::pair<const char*, scenarios::Operation>> kOperations = {
    {"on-demand", scenarios::Operation::kOnDemand},
    {"continuous", scenarios::Operation::kContinuous},
    {"both", scenarios::Operation::kBoth}};
const std::initializer_list<std::pair<const char*, crosslayer::Objective>> kObjectives = {
    {"min_bitrate", crosslayer::Objective::kMinBitrate},
    {"min_delay", crosslayer::Objective::kMinDelay}};
const std::initializer_list<std::pair<const char*, crosslayer::Band>> kBands = {
    {"licensed", crosslayer::Band::kLicensed}, {"unlicensed", crosslayer::Band::kUnlicensed}};
const std::initializer_list<std::pair<const char*, topology::Architecture>> kArchitectures = {
    {"cellular", topology::Architecture::kCellular},
    {"hybrid", topology::Architecture::kHybrid}};
const std::initializer_list<std::pair<const char*, simulator::RetransmissionMode>> kModes = {
    {"single_retry", simulator::RetransmissionMode::kSingleRetry},
    {"persistent", simulator::RetransmissionMode::kPersistent}};
const std::initializer_list<std::pair<const char*, OutputFormat>> kFormats = {
    {"json", OutputFormat::kJson}, {"text", OutputFormat::kText}};

template <typename Enum>
std::string name_of(Enum e, std::initializer_list<std::pair<const char*, Enum>> table) {
  for (const auto& [name, value] : table) {
    if (value == e) return name;
  }
  return "unknown";
}

// --- parsing -------------------------------------------------------------

scenarios::Range parse_range(const Fields& f, const char* key, scenarios::Range fallback) {
  if (!f.has(key)) return fallback;
  const auto& v = f.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    invalid(f.path(key), "expected [low, high]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

scenarios::StreamModel parse_stream(const json& j, const std::string& path) {
  Fields f(j, path,
           {"kind", "components", "bits_per_sample", "sample_rate", "triggers_per_year",
            "record_seconds", "campaign_seconds"});
  scenarios::StreamModel s;
  s.kind = f.choice("kind", s.kind, kStreamKinds);
  s.sensor.components = static_cast<int>(f.integer("components", s.sensor.components));
  s.sensor.bits_per_sample =
      static_cast<int>(f.integer("bits_per_sample", s.sensor.bits_per_sample));
  s.sensor.sample_rate = f.number("sample_rate", s.sensor.sample_rate);
  s.triggers_per_year = f.number("triggers_per_year", 0.0);
  s.record_seconds = f.number("record_seconds", 0.0);
  s.campaign_seconds = f.number("campaign_seconds", 0.0);
  return s;
}

scenarios::ScenarioProfile parse_scenario(const json& j, const std::string& path) {
  Fields f(j, path,
           {"builtin", "name", "node_count", "node_range", "spacing_m", "area_km2", "operation",
            "streams"});
  scenarios::ScenarioProfile p;
  if (f.has("builtin")) {
    const std::string name = f.string("builtin", "");
    try {
      p = scenarios::builtin_profile(name);
    } catch (const Error&) {
      invalid(f.path("builtin"), "unknown built-in profile '" + name + "'");
    }
  }
  p.name = f.string("name", p.name);
  p.node_count = f.integer("node_count", p.node_count);
  p.node_range = parse_range(f, "node_range", p.node_range);
  p.spacing_m = parse_range(f, "spacing_m", p.spacing_m);
  p.area_km2 = parse_range(f, "area_km2", p.area_km2);
  p.operation = f.choice("operation", p.operation, kOperations);
  if (f.has("streams")) {
    const auto& arr = array_at(f, "streams");
    p.streams.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      p.streams.push_back(parse_stream(arr[i], index(f.path("streams"), i)));
    }
  }
  return p;
}

crosslayer::Axis parse_axis(const Fields& f, const char* key, const crosslayer::Axis& fallback) {
  if (!f.has(key)) return fallback;
  const auto& v = f.at(key);
  const std::string path = f.path(key);
  crosslayer::Axis axis;
  if (v.is_number()) {
    axis.values = {v.get<double>()};
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) invalid(index(path, i), "expected a number");
      axis.values.push_back(v[i].get<double>());
    }
  } else if (v.is_object()) {
    Fields lmh(v, path, {"low", "mid", "high"});
    if (!lmh.has("low") || !lmh.has("mid") || !lmh.has("high")) {
      invalid(path, "expected low, mid and high");
    }
    const double lo = lmh.number("low", 0), mid = lmh.number("mid", 0), hi = lmh.number("high", 0);
    if (!(lo <= mid && mid <= hi)) invalid(path, "requires low <= mid <= high");
    axis = crosslayer::Axis::low_mid_high(lo, mid, hi);
  } else {
    invalid(path, "expected a number, an array or {low, mid, high}");
  }
  return axis;
}

DesignSection parse_design(const json& j, const std::string& path) {
  Fields f(j, path, {"ranges", "objective", "continuous_rate_bps", "triggers_per_year"});
  DesignSection d;
  if (f.has("ranges")) {
    Fields r(f.at("ranges"), f.path("ranges"),
             {"frame_efficiency", "frame_len", "trigger_payload", "tolerable_delay",
              "duty_cycle", "split_ratio", "frame_error_rate"});
    auto& g = d.ranges;
    g.frame_efficiency = parse_axis(r, "frame_efficiency", g.frame_efficiency);
    g.frame_len = parse_axis(r, "frame_len", g.frame_len);
    g.trigger_payload = parse_axis(r, "trigger_payload", g.trigger_payload);
    g.tolerable_delay = parse_axis(r, "tolerable_delay", g.tolerable_delay);
    g.duty_cycle = parse_axis(r, "duty_cycle", g.duty_cycle);
    g.split_ratio = parse_axis(r, "split_ratio", g.split_ratio);
    g.frame_error_rate = parse_axis(r, "frame_error_rate", g.frame_error_rate);
  }
  d.objective = f.choice("objective", d.objective, kObjectives);
  if (f.has("continuous_rate_bps")) d.continuous_rate = f.number("continuous_rate_bps", 0);
  if (f.has("triggers_per_year")) d.triggers_per_year = f.number("triggers_per_year", 0);
  return d;
}

crosslayer::TechnologyEntry parse_tech(const json& j, const std::string& path) {
  Fields f(j, path,
           {"name", "max_bitrate_bps", "max_duty_cycle", "band", "subscription_required"});
  crosslayer::TechnologyEntry t;
  t.name = f.string("name", "");
  t.max_bitrate = f.number("max_bitrate_bps", 0.0);
  t.max_duty_cycle = f.number("max_duty_cycle", 1.0);
  t.band = f.choice("band", t.band, kBands);
  t.subscription_required = f.boolean("subscription_required", false);
  return t;
}

topology::Point parse_point(const json& j, const std::string& path) {
  Fields f(j, path, {"x_km", "y_km"});
  if (!f.has("x_km") || !f.has("y_km")) invalid(path, "expected x_km and y_km");
  return {f.number("x_km", 0), f.number("y_km", 0)};
}

std::vector<topology::Point> parse_points(const Fields& f, const char* key) {
  std::vector<topology::Point> pts;
  if (!f.has(key)) return pts;
  const auto& arr = array_at(f, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    pts.push_back(parse_point(arr[i], index(f.path(key), i)));
  }
  return pts;
}

PlanSection parse_plan(const json& j, const std::string& path) {
  Fields f(j, path,
           {"architecture", "region_km", "node_spacing_km", "explicit_nodes",
            "gateway_spacing_km", "per_node_uplink_bps", "max_link_distance_km",
            "gateway_capacity_bps", "wired_sites"});
  PlanSection p;
  p.architecture = f.choice("architecture", p.architecture, kArchitectures);
  if (f.has("region_km")) {
    Fields r(f.at("region_km"), f.path("region_km"), {"width", "height"});
    p.region.width_km = r.number("width", p.region.width_km);
    p.region.height_km = r.number("height", p.region.height_km);
  }
  p.node_spacing_km = f.number("node_spacing_km", p.node_spacing_km);
  p.explicit_nodes = parse_points(f, "explicit_nodes");
  p.gateway_spacing_km = f.number("gateway_spacing_km", p.gateway_spacing_km);
  p.per_node_uplink = f.number("per_node_uplink_bps", p.per_node_uplink);
  p.max_link_distance_km = f.number("max_link_distance_km", p.max_link_distance_km);
  if (!f.has("gateway_capacity_bps")) {
    invalid(f.path("gateway_capacity_bps"), "required (no default capacity exists)");
  }
  p.gateway_capacity = f.number("gateway_capacity_bps", 0.0);
  p.wired_sites = parse_points(f, "wired_sites");
  return p;
}

cost::Money parse_money(const Fields& f, const char* key) {
  const double dollars = f.number(key, 0.0);
  return cost::Money{static_cast<std::int64_t>(std::llround(dollars * 100.0))};
}

CostOption parse_cost(const json& j, const std::string& path) {
  Fields f(j, path,
           {"name", "node_count", "node_unit_price", "gateway_count", "gateway_unit_price",
            "extra_mast_count", "mast_unit_price", "subscription_per_node_year", "years",
            "nodes_from_plan", "gateways_from_plan"});
  CostOption c;
  c.name = f.string("name", "");
  c.model.node_count = f.integer("node_count", 0);
  c.model.node_unit_price = parse_money(f, "node_unit_price");
  c.model.gateway_count = f.integer("gateway_count", 0);
  c.model.gateway_unit_price = parse_money(f, "gateway_unit_price");
  c.model.extra_mast_count = f.integer("extra_mast_count", 0);
  c.model.mast_unit_price = parse_money(f, "mast_unit_price");
  c.model.subscription_per_node_year = parse_money(f, "subscription_per_node_year");
  c.model.years = f.integer("years", 1);
  c.nodes_from_plan = f.boolean("nodes_from_plan", false);
  c.gateways_from_plan = f.boolean("gateways_from_plan", false);
  return c;
}

SimulationSection parse_simulation(const json& j, const std::string& path) {
  Fields f(j, path,
           {"frame_len", "frame_efficiency", "split_ratio", "duty_cycle", "bitrate_bps",
            "continuous_rate_bps", "triggers_per_year", "trigger_payload_bytes",
            "frame_error_rate", "retransmission", "duration_s", "node_count", "injections",
            "drain", "max_drain_cycles", "tolerable_delay_s", "threads"});
  SimulationSection s;
  s.frame_len = f.integer("frame_len", s.frame_len);
  s.frame_efficiency = f.number("frame_efficiency", s.frame_efficiency);
  s.split_ratio = f.number("split_ratio", s.split_ratio);
  s.duty_cycle = f.number("duty_cycle", s.duty_cycle);
  s.bitrate = f.number("bitrate_bps", s.bitrate);
  s.continuous_rate = f.number("continuous_rate_bps", s.continuous_rate);
  s.triggers_per_year = f.number("triggers_per_year", s.triggers_per_year);
  s.trigger_payload = f.integer("trigger_payload_bytes", s.trigger_payload);
  s.frame_error_rate = f.number("frame_error_rate", s.frame_error_rate);
  s.mode = f.choice("retransmission", s.mode, kModes);
  s.duration = f.number("duration_s", s.duration);
  const auto nodes = f.integer("node_count", static_cast<std::int64_t>(s.node_count));
  if (nodes < 1) invalid(f.path("node_count"), "must be >= 1");
  s.node_count = static_cast<std::size_t>(nodes);
  if (f.has("injections")) {
    const auto& arr = array_at(f, "injections");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Fields inj(arr[i], index(f.path("injections"), i), {"time_s", "node"});
      simulator::Injection in;
      in.time = inj.number("time_s", 0.0);
      if (inj.has("node")) in.node = static_cast<std::size_t>(inj.unsigned_integer("node", 0));
      s.injections.push_back(in);
    }
  }
  s.drain = f.boolean("drain", s.drain);
  s.max_drain_cycles = f.integer("max_drain_cycles", s.max_drain_cycles);
  s.tolerable_delay = f.number("tolerable_delay_s", s.tolerable_delay);
  s.threads = static_cast<unsigned>(f.unsigned_integer("threads", s.threads));
  return s;
}

// --- serialization -------------------------------------------------------

json range_json(const scenarios::Range& r) { return json::array({r.low, r.high}); }
json point_json(const topology::Point& p) { return {{"x_km", p.x}, {"y_km", p.y}}; }
double money_json(cost::Money m) { return static_cast<double>(m.cents) / 100.0; }

json points_json(const std::vector<topology::Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

// --- validation ----------------------------------------------------------

void check(bool ok, const std::string& path, const std::string& msg) {
  if (!ok) invalid(path, msg);
}

template <typename Fn>
void rethrow_at(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

void validate_axis(const crosslayer::Axis& axis, const std::string& path,
                   const std::function<bool(double)>& ok, const char* bound) {
  check(!axis.values.empty(), path, "empty range");
  for (std::size_t i = 0; i < axis.values.size(); ++i) {
    check(ok(axis.values[i]), index(path, i), std::string("must be ") + bound);
    if (i > 0) check(axis.values[i - 1] <= axis.values[i], path, "values must be ascending");
  }
}

}  // namespace

ProjectConfig config_from_json(const json& doc) {
  Fields f(doc, "",
           {"seed", "format", "scenario", "design", "catalog", "plan", "costs", "simulation"});
  ProjectConfig c;
  c.seed = f.unsigned_integer("seed", c.seed);
  c.format = f.choice("format", c.format, kFormats);
  if (!f.has("scenario")) invalid("scenario", "required");
  c.scenario = parse_scenario(f.at("scenario"), "scenario");
  if (f.has("design")) c.design = parse_design(f.at("design"), "design");
  if (f.has("catalog")) {
    const auto& arr = array_at(f, "catalog");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c.catalog.push_back(parse_tech(arr[i], index("catalog", i)));
    }
  } else {
    c.catalog = crosslayer::builtin_catalog();
  }
  if (!f.has("plan")) invalid("plan", "required");
  c.plan = parse_plan(f.at("plan"), "plan");
  if (f.has("costs")) {
    const auto& arr = array_at(f, "costs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c.costs.push_back(parse_cost(arr[i], index("costs", i)));
    }
  }
  if (f.has("simulation")) c.simulation = parse_simulation(f.at("simulation"), "simulation");
  validate(c);
  return c;
}

json config_to_json(const ProjectConfig& c) {
  json doc;
  doc["seed"] = c.seed;
  doc["format"] = name_of(c.format, kFormats);

  const auto& sc = c.scenario;
  json streams = json::array();
  for (const auto& s : sc.streams) {
    streams.push_back({{"kind", name_of(s.kind, kStreamKinds)},
                       {"components", s.sensor.components},
                       {"bits_per_sample", s.sensor.bits_per_sample},
                       {"sample_rate", s.sensor.sample_rate},
                       {"triggers_per_year", s.triggers_per_year},
                       {"record_seconds", s.record_seconds},
                       {"campaign_seconds", s.campaign_seconds}});
  }
  doc["scenario"] = {{"name", sc.name},
                     {"node_count", sc.node_count},
                     {"node_range", range_json(sc.node_range)},
                     {"spacing_m", range_json(sc.spacing_m)},
                     {"area_km2", range_json(sc.area_km2)},
                     {"operation", name_of(sc.operation, kOperations)},
                     {"streams", streams}};

  const auto& r = c.design.ranges;
  json design = {{"ranges",
                  {{"frame_efficiency", r.frame_efficiency.values},
                   {"frame_len", r.frame_len.values},
                   {"trigger_payload", r.trigger_payload.values},
                   {"tolerable_delay", r.tolerable_delay.values},
                   {"duty_cycle", r.duty_cycle.values},
                   {"split_ratio", r.split_ratio.values},
                   {"frame_error_rate", r.frame_error_rate.values}}},
                 {"objective", name_of(c.design.objective, kObjectives)}};
  if (c.design.continuous_rate) design["continuous_rate_bps"] = *c.design.continuous_rate;
  if (c.design.triggers_per_year) design["triggers_per_year"] = *c.design.triggers_per_year;
  doc["design"] = design;

  json catalog = json::array();
  for (const auto& t : c.catalog) {
    catalog.push_back({{"name", t.name},
                       {"max_bitrate_bps", t.max_bitrate},
                       {"max_duty_cycle", t.max_duty_cycle},
                       {"band", name_of(t.band, kBands)},
                       {"subscription_required", t.subscription_required}});
  }
  doc["catalog"] = catalog;

  const auto& p = c.plan;
  doc["plan"] = {{"architecture", name_of(p.architecture, kArchitectures)},
                 {"region_km", {{"width", p.region.width_km}, {"height", p.region.height_km}}},
                 {"node_spacing_km", p.node_spacing_km},
                 {"explicit_nodes", points_json(p.explicit_nodes)},
                 {"gateway_spacing_km", p.gateway_spacing_km},
                 {"per_node_uplink_bps", p.per_node_uplink},
                 {"max_link_distance_km", p.max_link_distance_km},
                 {"gateway_capacity_bps", p.gateway_capacity},
                 {"wired_sites", points_json(p.wired_sites)}};

  json costs = json::array();
  for (const auto& o : c.costs) {
    const auto& m = o.model;
    costs.push_back({{"name", o.name},
                     {"node_count", m.node_count},
                     {"node_unit_price", money_json(m.node_unit_price)},
                     {"gateway_count", m.gateway_count},
                     {"gateway_unit_price", money_json(m.gateway_unit_price)},
                     {"extra_mast_count", m.extra_mast_count},
                     {"mast_unit_price", money_json(m.mast_unit_price)},
                     {"subscription_per_node_year", money_json(m.subscription_per_node_year)},
                     {"years", m.years},
                     {"nodes_from_plan", o.nodes_from_plan},
                     {"gateways_from_plan", o.gateways_from_plan}});
  }
  doc["costs"] = costs;

  const auto& s = c.simulation;
  json injections = json::array();
  for (const auto& inj : s.injections) {
    json e = {{"time_s", inj.time}};
    if (inj.node) e["node"] = *inj.node;
    injections.push_back(e);
  }
  doc["simulation"] = {{"frame_len", s.frame_len},
                       {"frame_efficiency", s.frame_efficiency},
                       {"split_ratio", s.split_ratio},
                       {"duty_cycle", s.duty_cycle},
                       {"bitrate_bps", s.bitrate},
                       {"continuous_rate_bps", s.continuous_rate},
                       {"triggers_per_year", s.triggers_per_year},
                       {"trigger_payload_bytes", s.trigger_payload},
                       {"frame_error_rate", s.frame_error_rate},
                       {"retransmission", name_of(s.mode, kModes)},
                       {"duration_s", s.duration},
                       {"node_count", s.node_count},
                       {"injections", injections},
                       {"drain", s.drain},
                       {"max_drain_cycles", s.max_drain_cycles},
                       {"tolerable_delay_s", s.tolerable_delay},
                       {"threads", s.threads}};
  return doc;
}

ProjectConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("<file>", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    invalid("<file>", std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(doc);
}

void validate(const ProjectConfig& c) {
  // Scenario.
  const auto& sc = c.scenario;
  check(sc.node_count >= 1, "scenario.node_count", "must be >= 1");
  check(!sc.streams.empty(), "scenario.streams", "profile has no streams");
  for (std::size_t i = 0; i < sc.streams.size(); ++i) {
    rethrow_at(index("scenario.streams", i), [&] { sc.streams[i].validate(); });
  }

  // Design ranges, value by value.
  const auto& r = c.design.ranges;
  const std::string rp = "design.ranges";
  auto pos = [](double v) { return v > 0.0; };
  validate_axis(r.frame_efficiency, rp + ".frame_efficiency",
                [](double v) { return v > 0.0 && v <= 1.0; }, "in (0, 1]");
  validate_axis(r.frame_len, rp + ".frame_len", pos, "positive");
  validate_axis(r.trigger_payload, rp + ".trigger_payload",
                [](double v) { return v >= 1.0; }, ">= 1 byte");
  validate_axis(r.tolerable_delay, rp + ".tolerable_delay", pos, "positive");
  validate_axis(r.duty_cycle, rp + ".duty_cycle",
                [](double v) { return v > 0.0 && v <= 1.0; }, "in (0, 1]");
  validate_axis(r.split_ratio, rp + ".split_ratio", pos, "positive");
  validate_axis(r.frame_error_rate, rp + ".frame_error_rate",
                [](double v) { return v >= 0.0 && v < 1.0; }, "in [0, 1)");
  if (c.design.continuous_rate) {
    check(*c.design.continuous_rate >= 0.0, "design.continuous_rate_bps", "must be >= 0");
  }
  if (c.design.triggers_per_year) {
    check(*c.design.triggers_per_year > 0.0, "design.triggers_per_year", "must be > 0");
  }

  for (std::size_t i = 0; i < c.catalog.size(); ++i) {
    rethrow_at(index("catalog", i), [&] { c.catalog[i].validate(); });
  }

  // Plan.
  const auto& p = c.plan;
  check(p.region.width_km > 0.0, "plan.region_km.width", "must be positive");
  check(p.region.height_km > 0.0, "plan.region_km.height", "must be positive");
  if (p.explicit_nodes.empty()) {
    check(p.node_spacing_km > 0.0 &&
              p.node_spacing_km <= std::min(p.region.width_km, p.region.height_km),
          "plan.node_spacing_km", "must be positive and no larger than the region");
  }
  for (std::size_t i = 0; i < p.explicit_nodes.size(); ++i) {
    const auto& pt = p.explicit_nodes[i];
    check(pt.x >= 0 && pt.y >= 0 && pt.x <= p.region.width_km && pt.y <= p.region.height_km,
          index("plan.explicit_nodes", i), "outside the region");
  }
  for (std::size_t i = 0; i < p.wired_sites.size(); ++i) {
    const auto& pt = p.wired_sites[i];
    check(pt.x >= 0 && pt.y >= 0 && pt.x <= p.region.width_km && pt.y <= p.region.height_km,
          index("plan.wired_sites", i), "outside the region");
  }
  check(p.gateway_spacing_km > 0.0, "plan.gateway_spacing_km", "must be positive");
  check(p.per_node_uplink >= 0.0, "plan.per_node_uplink_bps", "must be >= 0");
  check(p.max_link_distance_km > 0.0, "plan.max_link_distance_km", "must be positive");
  check(p.gateway_capacity >= 0.0, "plan.gateway_capacity_bps", "must be >= 0");

  for (std::size_t i = 0; i < c.costs.size(); ++i) {
    const std::string cp = index("costs", i);
    const auto& m = c.costs[i].model;
    check(m.node_count >= 0, cp + ".node_count", "must be >= 0");
    check(m.gateway_count >= 0, cp + ".gateway_count", "must be >= 0");
    check(m.extra_mast_count >= 0, cp + ".extra_mast_count", "must be >= 0");
    check(m.node_unit_price.cents >= 0, cp + ".node_unit_price", "must be >= 0");
    check(m.gateway_unit_price.cents >= 0, cp + ".gateway_unit_price", "must be >= 0");
    check(m.mast_unit_price.cents >= 0, cp + ".mast_unit_price", "must be >= 0");
    check(m.subscription_per_node_year.cents >= 0, cp + ".subscription_per_node_year",
          "must be >= 0");
    check(m.years >= 1, cp + ".years", "must be >= 1");
  }

  // Simulation.
  const auto& s = c.simulation;
  const std::string sp = "simulation";
  check(s.frame_len >= 2, sp + ".frame_len", "must be >= 2 bytes");
  check(s.frame_efficiency > 0.0 && s.frame_efficiency <= 1.0, sp + ".frame_efficiency",
        "must lie in (0, 1]");
  check(s.split_ratio > 0.0, sp + ".split_ratio", "must be positive");
  check(s.duty_cycle > 0.0 && s.duty_cycle <= 1.0, sp + ".duty_cycle", "must lie in (0, 1]");
  check(s.bitrate > 0.0, sp + ".bitrate_bps", "must be positive");
  check(s.continuous_rate >= 0.0, sp + ".continuous_rate_bps", "must be >= 0");
  check(s.triggers_per_year >= 0.0, sp + ".triggers_per_year", "must be >= 0");
  check(s.trigger_payload >= 1, sp + ".trigger_payload_bytes", "must be >= 1");
  check(s.frame_error_rate >= 0.0 && s.frame_error_rate < 1.0, sp + ".frame_error_rate",
        "must lie in [0, 1)");
  check(s.duration >= 0.0, sp + ".duration_s", "must be >= 0");
  check(s.tolerable_delay > 0.0, sp + ".tolerable_delay_s", "must be positive");
  check(s.max_drain_cycles >= 0, sp + ".max_drain_cycles", "must be >= 0");
  for (std::size_t i = 0; i < s.injections.size(); ++i) {
    check(s.injections[i].time >= 0.0, index(sp + ".injections", i) + ".time_s", "must be >= 0");
    check(!s.injections[i].node || *s.injections[i].node < s.node_count,
          index(sp + ".injections", i) + ".node", "out of range");
  }
  rethrow_at(sp + ".frame_len", [&] {
    frames::split_payload(s.frame_len, s.frame_efficiency, s.split_ratio);
  });
  rethrow_at(sp, [&] { make_sim_config(c).validate(); });
}

simulator::SimConfig make_sim_config(const ProjectConfig& c) {
  const auto& s = c.simulation;
  simulator::SimConfig cfg;
  cfg.frame = frames::split_payload(s.frame_len, s.frame_efficiency, s.split_ratio);
  cfg.duty_cycle = s.duty_cycle;
  cfg.bitrate = s.bitrate;
  cfg.continuous_rate = s.continuous_rate;
  cfg.trigger_rate = s.triggers_per_year / kSecondsPerYear;
  cfg.trigger_payload = s.trigger_payload;
  cfg.frame_error_rate = s.frame_error_rate;
  cfg.mode = s.mode;
  cfg.duration = s.duration;
  cfg.node_count = s.node_count;
  cfg.seed = c.seed;
  cfg.injections = s.injections;
  cfg.drain = s.drain;
  cfg.max_drain_cycles = s.max_drain_cycles;
  cfg.threads = s.threads;
  return cfg;
}

crosslayer::DesignParams sim_design_params(const ProjectConfig& c) {
  const auto& s = c.simulation;
  crosslayer::DesignParams p;
  p.frame_efficiency = s.frame_efficiency;
  p.frame_len = static_cast<double>(s.frame_len);
  p.trigger_payload = static_cast<double>(s.trigger_payload);
  p.tolerable_delay = s.tolerable_delay;
  p.duty_cycle = s.duty_cycle;
  p.split_ratio = s.split_ratio;
  p.frame_error_rate = s.frame_error_rate;
  return p;
}

std::uint64_t config_hash(const ProjectConfig& config) {
  // nlohmann::json (not ordered_json) keeps object keys sorted.
  const std::string canonical = config_to_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> preset_names() {
  return {"groningen", "groningen-1h", "groningen-table3"};
}

ProjectConfig preset(const std::string& name) {
  ProjectConfig c;
  c.seed = 1;
  c.scenario = scenarios::groningen_profile();

  crosslayer::DesignParams mid;  // defaults are the design-study point
  c.design.ranges = crosslayer::ParamRanges::single(mid);
  c.design.objective = crosslayer::Objective::kMinBitrate;
  c.catalog = crosslayer::builtin_catalog();

  c.plan.architecture = topology::Architecture::kHybrid;
  c.plan.region = {40.0, 40.0};
  c.plan.node_spacing_km = 1.0;
  c.plan.gateway_spacing_km = 6.0;
  c.plan.per_node_uplink = 10770.0;
  c.plan.max_link_distance_km = 6.0;
  c.plan.gateway_capacity = 1e6;

  CostOption lora{"LoRa", cost::lora_reference(), true, true};
  CostOption nbiot{"NB-IoT", cost::nbiot_reference(), true, false};
  c.costs = {lora, nbiot};

  c.simulation = SimulationSection{};
  c.simulation.injections = {simulator::Injection{0.0, std::nullopt}};

  if (name == "groningen") return c;
  if (name == "groningen-1h") {
    mid.tolerable_delay = kSecondsPerHour;
    c.design.ranges = crosslayer::ParamRanges::single(mid);
    c.simulation.tolerable_delay = kSecondsPerHour;
    return c;
  }
  if (name == "groningen-table3") {
    c.design.ranges = crosslayer::ParamRanges::table3();
    return c;
  }
  invalid("--preset", "unknown preset '" + name + "'");
}

}  // namespace seisnet::app
