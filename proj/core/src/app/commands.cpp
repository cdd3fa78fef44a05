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

#include <seisnet/app/commands.hpp>

#include <algorithm>

#include <fmt/format.h>

#include <seisnet/cost.hpp>
#include <seisnet/crosslayer.hpp>
#include <seisnet/error.hpp>
#include <seisnet/scenarios.hpp>
#include <seisnet/simulator.hpp>
#include <seisnet/topology.hpp>

namespace seisnet::app {

namespace {

// Text tables show at most this many rows of long candidate lists; the JSON
// sections always carry the complete lists.
constexpr std::size_t kTableRowLimit = 20;

const char* kind_name(scenarios::StreamKind k) {
  return k == scenarios::StreamKind::kContinuous ? "continuous" : "intermittent";
}

Document params_json(const crosslayer::DesignParams& p) {
  return {{"frame_efficiency", p.frame_efficiency}, {"frame_len", p.frame_len},
          {"trigger_payload", p.trigger_payload},   {"tolerable_delay", p.tolerable_delay},
          {"duty_cycle", p.duty_cycle},             {"split_ratio", p.split_ratio},
          {"frame_error_rate", p.frame_error_rate}};
}

Document outcome_json(const crosslayer::DesignOutcome& o) {
  Document criteria = Document::array();
  for (const auto& c : o.criteria) {
    criteria.push_back({{"criterion", crosslayer::to_string(c.criterion)},
                        {"passed", c.passed},
                        {"reason", c.reason},
                        {"warnings", c.warnings}});
  }
  Document matched = Document::array();
  for (const auto& t : o.matched) matched.push_back(t.name);
  return {{"params", params_json(o.params)},
          {"required_bitrate_bps", o.required_bitrate},
          {"frames_needed", o.frames_needed},
          {"total_delay_s", o.total_delay},
          {"feasible", o.feasible()},
          {"criteria", criteria},
          {"matched_technologies", matched}};
}

std::vector<Document> outcome_row(const crosslayer::DesignOutcome& o) {
  std::string techs;
  for (const auto& t : o.matched) techs += (techs.empty() ? "" : " ") + t.name;
  const auto& p = o.params;
  return {p.frame_efficiency, p.frame_len,       p.trigger_payload,  p.tolerable_delay,
          p.duty_cycle,       p.split_ratio,     p.frame_error_rate, o.required_bitrate,
          human_rate(o.required_bitrate),        o.frames_needed,    techs};
}

const std::vector<std::string> kOutcomeColumns = {
    "eta_f", "L_f", "L_D2", "t_D2_s", "duty", "rho_d", "lambda_f", "R_b_bps", "R_b",
    "frames", "technologies"};

std::string failed_summary(const crosslayer::DesignOutcome& o) {
  std::string s;
  for (const auto& c : o.criteria) {
    if (!c.passed) s += (s.empty() ? "" : "; ") + std::string(crosslayer::to_string(c.criterion)) + ": " + c.reason;
  }
  return s;
}

}  // namespace

CommandResult cmd_rates(const ProjectConfig& config) {
  Report report("rates", config);
  const auto& profile = config.scenario;

  Table streams{"streams (per sensor)",
                {"stream", "kind", "bits", "components", "sps", "bitrate_bps", "bitrate",
                 "yearly_bytes", "yearly", "trigger_bytes"},
                {}};
  double per_node = 0.0;
  for (std::size_t i = 0; i < profile.streams.size(); ++i) {
    const auto& s = profile.streams[i];
    const double rate = scenarios::stream_bitrate(s);
    const double yearly = scenarios::yearly_volume(s);
    per_node += yearly;
    Document trig = nullptr;
    if (s.kind == scenarios::StreamKind::kIntermittent) trig = scenarios::trigger_payload(s);
    streams.rows.push_back({static_cast<std::int64_t>(i), kind_name(s.kind),
                            s.sensor.bits_per_sample, s.sensor.components, s.sensor.sample_rate,
                            rate, human_rate(rate), yearly, human_bytes(yearly), trig});
  }
  const double network = scenarios::network_yearly_volume(profile);

  auto& sum = report.summary();
  sum["profile"] = profile.name;
  sum["node_count"] = profile.node_count;
  sum["per_sensor_yearly_bytes"] = per_node;
  sum["per_sensor_yearly"] = human_bytes(per_node);
  sum["network_yearly_bytes"] = network;
  sum["network_yearly"] = human_bytes(network);
  report.add_table(streams);
  return {std::move(report), ExitCode::kOk};
}

CommandResult cmd_design(const ProjectConfig& config) {
  Report report("design", config);
  const double rc = config.design.continuous_rate.value_or(
      scenarios::continuous_rate(config.scenario));
  const double per_year =
      config.design.triggers_per_year.value_or(scenarios::triggers_per_year(config.scenario));
  if (!(per_year > 0.0)) {
    throw ValidationError("design.triggers_per_year",
                          "scenario has no intermittent stream; set a trigger rate");
  }

  const auto result = crosslayer::design_search(config.design.ranges, config.design.objective,
                                                rc, per_year / kSecondsPerYear, config.catalog);

  auto& sum = report.summary();
  sum["objective"] =
      config.design.objective == crosslayer::Objective::kMinBitrate ? "min_bitrate" : "min_delay";
  sum["continuous_rate_bps"] = rc;
  sum["triggers_per_year"] = per_year;
  sum["candidates"] = result.evaluated;
  sum["feasible"] = result.feasible.size();
  sum["pareto"] = result.pareto.size();

  Document feasible = Document::array();
  for (const auto& o : result.feasible) feasible.push_back(outcome_json(o));
  Document pareto = Document::array();
  for (const auto& o : result.pareto) pareto.push_back(outcome_json(o));
  Document rejected = Document::array();
  for (const auto& o : result.rejected) rejected.push_back(outcome_json(o));

  if (!result.feasible.empty()) {
    const auto& best = result.feasible.front();
    sum["chosen_bitrate_bps"] = best.required_bitrate;
    sum["chosen_bitrate"] = human_rate(best.required_bitrate);
    sum["chosen_frames_per_trigger"] = best.frames_needed;
    sum["chosen_total_delay_s"] = best.total_delay;
    std::string techs;
    for (const auto& t : best.matched) techs += (techs.empty() ? "" : " ") + t.name;
    sum["chosen_technologies"] = techs;
    report.section("chosen") = outcome_json(best);
    for (const auto& c : best.criteria) {
      for (const auto& w : c.warnings) report.add_note(std::string(crosslayer::to_string(c.criterion)) + ": " + w);
    }

    Table t{"feasible designs", kOutcomeColumns, {}};
    for (std::size_t i = 0; i < result.feasible.size() && i < kTableRowLimit; ++i) {
      t.rows.push_back(outcome_row(result.feasible[i]));
    }
    report.add_table(t);
    Table pt{"pareto front (R_b vs t_D2)", kOutcomeColumns, {}};
    for (const auto& o : result.pareto) pt.rows.push_back(outcome_row(o));
    report.add_table(pt);
    if (result.feasible.size() > kTableRowLimit) {
      report.add_note(fmt::format("feasible table shows {} of {} designs; see 'feasible'",
                                  kTableRowLimit, result.feasible.size()));
    }
  } else {
    sum["chosen_bitrate_bps"] = nullptr;
    report.section("chosen") = nullptr;
    Table diag{"diagnosis (infeasible candidates)",
               {"eta_f", "L_f", "L_D2", "t_D2_s", "duty", "rho_d", "lambda_f", "R_b_bps",
                "failed"},
               {}};
    for (std::size_t i = 0; i < result.rejected.size() && i < kTableRowLimit; ++i) {
      const auto& o = result.rejected[i];
      const auto& p = o.params;
      diag.rows.push_back({p.frame_efficiency, p.frame_len, p.trigger_payload,
                           p.tolerable_delay, p.duty_cycle, p.split_ratio, p.frame_error_rate,
                           o.required_bitrate, failed_summary(o)});
    }
    report.add_table(diag);
    report.add_note("no candidate design satisfies all feasibility criteria");
  }
  report.section("feasible") = feasible;
  report.section("pareto") = pareto;
  report.section("rejected") = rejected;

  return {std::move(report),
          result.feasible.empty() ? ExitCode::kInfeasibleDesign : ExitCode::kOk};
}

CommandResult cmd_plan(const ProjectConfig& config) {
  Report report("plan", config);
  const auto& pc = config.plan;
  const auto nodes = pc.explicit_nodes.empty()
                         ? topology::grid_nodes(pc.region, pc.node_spacing_km)
                         : topology::explicit_nodes(pc.region, pc.explicit_nodes);
  topology::PlanInputs in;
  in.architecture = pc.architecture;
  in.gateway_spacing_km = pc.gateway_spacing_km;
  in.per_node_uplink = pc.per_node_uplink;
  in.max_link_distance_km = pc.max_link_distance_km;
  in.gateway_capacity = pc.gateway_capacity;
  in.wired_sites = pc.wired_sites;
  const auto plan = topology::plan_network(pc.region, nodes, in);

  const auto n_nodes = static_cast<std::int64_t>(plan.nodes.positions.size());
  const double total_load = plan.total_load();
  double max_load = 0.0;
  for (double l : plan.per_gateway_load) max_load = std::max(max_load, l);

  auto& sum = report.summary();
  sum["architecture"] = topology::to_string(plan.architecture);
  sum["region_km"] = fmt::format("{} x {}", format_number(pc.region.width_km),
                                 format_number(pc.region.height_km));
  sum["nodes"] = n_nodes;
  sum["gateways_estimate"] = plan.formula_gateway_count;
  sum["gateways_placed"] = plan.gateways.size();
  sum["gateways_wired"] = plan.gateways.size() - plan.wireless_gateway_count();
  sum["uncovered_nodes"] = plan.uncovered.size();
  sum["overloaded_gateways"] = plan.overloaded.size();
  sum["total_load_bps"] = total_load;
  sum["mean_load_per_estimated_gateway_bps"] =
      total_load / static_cast<double>(plan.formula_gateway_count);
  sum["mean_load_per_placed_gateway_bps"] =
      plan.gateways.empty() ? 0.0 : total_load / static_cast<double>(plan.gateways.size());
  sum["max_gateway_load_bps"] = max_load;

  Table gw{"gateways", {"gateway", "x_km", "y_km", "wired", "nodes", "load_bps", "overloaded"}, {}};
  for (std::size_t g = 0; g < plan.gateways.size(); ++g) {
    const bool over = std::find(plan.overloaded.begin(), plan.overloaded.end(), g) !=
                      plan.overloaded.end();
    gw.rows.push_back({static_cast<std::int64_t>(g), plan.gateways[g].position.x,
                       plan.gateways[g].position.y, plan.gateways[g].wired,
                       plan.per_gateway_nodes[g], plan.per_gateway_load[g], over});
  }
  report.add_table(gw);
  report.section("uncovered_nodes") = plan.uncovered;

  Table costs{"opex by option",
              {"option", "nodes", "node_price", "gateways", "gateway_price", "masts",
               "mast_price", "subscription", "years", "total_opex_cents", "total_opex"},
              {}};
  for (const auto& opt : config.costs) {
    auto m = opt.model;
    if (opt.nodes_from_plan) m.node_count = n_nodes;
    if (opt.gateways_from_plan) m.gateway_count = plan.formula_gateway_count;
    const auto total = cost::total_opex(m);
    costs.rows.push_back({opt.name, m.node_count, cost::format_money(m.node_unit_price),
                          m.gateway_count, cost::format_money(m.gateway_unit_price),
                          m.extra_mast_count, cost::format_money(m.mast_unit_price),
                          cost::format_money(m.subscription_per_node_year), m.years,
                          total.cents, cost::format_money(total)});
  }
  if (!config.costs.empty()) {
    report.add_table(costs);
    report.add_note(std::string("cost: ") + cost::kMaintenanceDisclaimer);
  }
  for (const auto& n : plan.notes) report.add_note(n);
  return {std::move(report), ExitCode::kOk};
}

CommandResult cmd_simulate(const ProjectConfig& config, std::ostream* trace) {
  Report report("simulate", config);
  auto sim_cfg = make_sim_config(config);
  sim_cfg.record_trace = trace != nullptr;
  const auto sim = simulator::run(sim_cfg);
  const auto params = sim_design_params(config);
  const auto cmp = simulator::compare_to_analytical(sim, params, sim_cfg.bitrate);
  const auto buf = simulator::required_buffer(sim);

  std::int64_t delivered = 0;
  for (const auto& n : sim.nodes) delivered += n.triggers_delivered;

  auto& sum = report.summary();
  sum["nodes"] = sim_cfg.node_count;
  sum["frame"] = fmt::format("L_f={} L_h={} L_d1={} L_d2={}", sim_cfg.frame.total_len(),
                             sim_cfg.frame.header_len(), sim_cfg.frame.d1_len(),
                             sim_cfg.frame.d2_len());
  sum["retransmission"] = simulator::to_string(sim_cfg.mode);
  sum["cycle_period_s"] = sim.cycle_period;
  sum["elapsed_s"] = sim.elapsed;
  sum["frames_sent"] = sim.frames_sent;
  sum["frames_damaged"] = sim.frames_damaged;
  sum["frames_retransmitted"] = sim.frames_retransmitted;
  sum["empirical_fer"] = sim.empirical_fer();
  sum["triggers_generated"] = sim.triggers_generated;
  sum["triggers_delivered"] = delivered;
  sum["predicted_delay_s"] = cmp.predicted;
  if (cmp.empty) {
    sum["mean_delay_s"] = nullptr;
    sum["relative_error"] = nullptr;
    report.add_note("no trigger was delivered; delay comparison is empty");
  } else {
    sum["mean_delay_s"] = cmp.mean_delay;
    sum["mean_delay_last_byte_s"] = cmp.mean_delay_last_byte;
    sum["relative_error"] = cmp.relative_error;
    sum["relative_error_last_byte"] = cmp.relative_error_last_byte;
  }
  sum["retry_violations"] = cmp.retry_violations;
  sum["required_buffer_s"] = buf.defined ? Document(buf.seconds) : Document(nullptr);
  sum["buffer_unstable"] = buf.unstable;
  sum["aggregate_throughput_bps"] = sim.aggregate_throughput;

  report.section("comparison") = {{"empty", cmp.empty},
                                  {"samples", cmp.samples},
                                  {"predicted_s", cmp.predicted},
                                  {"mean_s", cmp.mean_delay},
                                  {"median_s", cmp.median_delay},
                                  {"p95_s", cmp.p95_delay},
                                  {"max_s", cmp.max_delay},
                                  {"mean_last_byte_s", cmp.mean_delay_last_byte},
                                  {"relative_error", cmp.relative_error},
                                  {"relative_error_last_byte", cmp.relative_error_last_byte},
                                  {"single_retry_held", cmp.single_retry_held}};

  Table ledger{"byte ledger", {"stream", "generated", "delivered", "buffered", "in_flight"}, {}};
  ledger.rows.push_back({"continuous", sim.continuous.generated, sim.continuous.delivered,
                         sim.continuous.buffered, sim.continuous.in_flight});
  ledger.rows.push_back({"intermittent", sim.intermittent.generated, sim.intermittent.delivered,
                         sim.intermittent.buffered, sim.intermittent.in_flight});
  report.add_table(ledger);

  Table nodes{"nodes",
              {"node", "frames", "damaged", "retries", "triggers", "delivered", "max_buffer_B",
               "throughput_bps"},
              {}};
  for (const auto& n : sim.nodes) {
    nodes.rows.push_back({n.node, n.frames_sent, n.frames_damaged, n.frames_retransmitted,
                          n.triggers_generated, n.triggers_delivered, n.max_buffer,
                          n.throughput});
  }
  report.add_table(nodes);
  for (const auto& w : sim.warnings) report.add_note(w);
  if (trace) simulator::write_trace_csv(*trace, sim);
  return {std::move(report), ExitCode::kOk};
}

CommandResult run_command(const std::string& name, const ProjectConfig& config,
                          std::ostream* trace) {
  if (name == "rates") return cmd_rates(config);
  if (name == "design") return cmd_design(config);
  if (name == "plan") return cmd_plan(config);
  if (name == "simulate") return cmd_simulate(config, trace);
  throw ValidationError("<command>", "unknown command '" + name + "'");
}

}  // namespace seisnet::app
