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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include <seisnet/app/commands.hpp>
#include <seisnet/app/config.hpp>
#include <seisnet/cost.hpp>
#include <seisnet/crosslayer.hpp>
#include <seisnet/frames.hpp>
#include <seisnet/scenarios.hpp>
#include <seisnet/simulator.hpp>
#include <seisnet/topology.hpp>

namespace {

using namespace seisnet;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back((ok ? "" : "[x] ") + what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }
bool sig4(double v, double target) { return std::abs(v - target) <= 5e-4 * std::abs(target); }

Outcome ac1_bitrate_goldens() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto mid = app::cmd_design(app::preset("groningen"));
  const auto hour = app::cmd_design(app::preset("groningen-1h"));
  const double elapsed = seconds_since(t0);
  const double rb_mid = mid.report.document()["summary"]["chosen_bitrate_bps"].get<double>() / 1e3;
  const double rb_hour =
      hour.report.document()["summary"]["chosen_bitrate_bps"].get<double>() / 1e3;
  o.check(within(rb_mid, 10.77, 0.01), fmt::format("R_b(10 h) {:.4f} kbps vs 10.77 +/- 0.01", rb_mid));
  o.check(within(rb_hour, 107.7, 0.1), fmt::format("R_b(1 h) {:.3f} kbps vs 107.7 +/- 0.1", rb_hour));
  o.check(elapsed < 1.0, fmt::format("runtime {:.3f} s < 1 s", elapsed));
  return o;
}

Outcome ac2_rate_table() {
  Outcome o;
  const auto t0 = Clock::now();
  using scenarios::SensorSpec;
  using scenarios::StreamModel;
  const double ansi[] = {200, 400, 800};
  const double ansi_vol[] = {788.4e6, 1.577e9, 3.154e9};
  const double gmm[] = {7200, 10800, 14400};
  const double gmm_vol[] = {54e6, 81e6, 108e6};
  int exact = 0, volumes = 0;
  for (int i = 0; i < 3; ++i) {
    const auto a = StreamModel::continuous(SensorSpec{1, 2 << i, 100.0});
    const auto g = StreamModel::intermittent(SensorSpec{3, 24, 100.0 + 50.0 * i}, 500.0, 120.0);
    exact += scenarios::stream_bitrate(a) == ansi[i];
    exact += scenarios::stream_bitrate(g) == gmm[i];
    volumes += sig4(scenarios::yearly_volume(a), ansi_vol[i]);
    volumes += sig4(scenarios::yearly_volume(g), gmm_vol[i]);
  }
  const auto rates = app::cmd_rates(app::preset("groningen"));
  const double total = rates.report.document()["summary"]["network_yearly_bytes"].get<double>();
  const double elapsed = seconds_since(t0);
  o.check(exact == 6, fmt::format("{}/6 stream bitrates exact", exact));
  o.check(volumes == 6, fmt::format("{}/6 yearly volumes to 4 significant figures", volumes));
  o.check(std::abs(total - 2.66e12) <= 0.01 * 2.66e12,
          fmt::format("network total {:.4f} TB vs 2.66 TB +/- 1%", total / 1e12));
  o.check(elapsed < 1.0, fmt::format("runtime {:.3f} s < 1 s", elapsed));
  return o;
}

Outcome ac3_trigger_payloads() {
  Outcome o;
  const double want[] = {108e3, 162e3, 216e3};
  for (int i = 0; i < 3; ++i) {
    const auto s = scenarios::StreamModel::intermittent(
        scenarios::SensorSpec{3, 24, 100.0 + 50.0 * i}, 500.0, 120.0);
    const double got = scenarios::trigger_payload(s);
    o.check(got == want[i], fmt::format("120 s x {} kbps = {} B (want {})",
                                        scenarios::stream_bitrate(s) / 1e3, got, want[i]));
  }
  return o;
}

Outcome ac4_topology_cost() {
  Outcome o;
  const auto gw = topology::gateway_count({40, 40}, 6.0);
  const auto lora = cost::total_opex(cost::lora_reference());
  const auto nbiot = cost::total_opex(cost::nbiot_reference());
  o.check(gw == 45, fmt::format("gateway_count(40x40, 6 km) = {}", gw));
  o.check(lora == cost::Money::dollars(61'000), "LoRa opex " + cost::format_money(lora));
  o.check(nbiot == cost::Money::dollars(156'000), "NB-IoT opex " + cost::format_money(nbiot));
  return o;
}

Outcome ac5_simulator_vs_formula() {
  Outcome o;
  const auto cfg = app::preset("groningen");

  const auto t0 = Clock::now();
  const auto sim = simulator::run(app::make_sim_config(cfg));
  const double elapsed = seconds_since(t0);
  const auto lossless =
      simulator::compare_to_analytical(sim, app::sim_design_params(cfg), cfg.simulation.bitrate);
  o.check(!lossless.empty && std::abs(lossless.relative_error) <= 0.02,
          fmt::format("lossless: {} triggers, mean {:.1f} s vs {:.1f} s, error {:+.2f}% (<= 2%)",
                      lossless.samples, lossless.mean_delay, lossless.predicted,
                      100 * lossless.relative_error));

  auto lossy = cfg;
  lossy.simulation.frame_error_rate = 0.01;
  lossy.simulation.mode = simulator::RetransmissionMode::kSingleRetry;
  lossy.simulation.node_count = 16;
  const auto lossy_sim = simulator::run(app::make_sim_config(lossy));
  const auto cmp = simulator::compare_to_analytical(lossy_sim, app::sim_design_params(lossy),
                                                    lossy.simulation.bitrate);
  o.check(cmp.samples >= 10 && std::abs(cmp.relative_error) <= 0.05,
          fmt::format("FER 0.01 single_retry: {} replications, error {:+.2f}% (<= 5%), "
                      "{} resend violations",
                      cmp.samples, 100 * cmp.relative_error, cmp.retry_violations));
  o.check(elapsed < 10.0,
          fmt::format("16 nodes x {:.0f} s simulated in {:.3f} s (< 10 s)",
                      cfg.simulation.duration, elapsed));
  return o;
}

// Byte-by-byte delivery oracle in exact integer arithmetic.
std::int64_t brute_force_frames(std::int64_t payload, std::int64_t num, std::int64_t den) {
  std::int64_t k = 0;
  for (std::int64_t byte = 1; byte <= payload; ++byte) {
    while (k * num < byte * den) ++k;
  }
  return std::max<std::int64_t>(k, 1);
}

Outcome ac6_properties() {
  constexpr int kCases = 1000;
  Outcome o;
  std::mt19937_64 rng(6);
  auto real = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto integer = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto params = [&] {
    crosslayer::DesignParams p;
    p.frame_efficiency = real(0.3, 1.0);
    p.frame_len = static_cast<double>(integer(16, 1024));
    p.trigger_payload = real(1e3, 1e6);
    p.tolerable_delay = real(60.0, 1e5);
    p.duty_cycle = real(0.001, 1.0);
    p.split_ratio = real(0.1, 10.0);
    p.frame_error_rate = real(0.0, 0.5);
    return p;
  };

  int scaling = 0;
  for (int i = 0; i < kCases; ++i) {
    auto p = params();
    const double k = real(0.01, 100.0);
    const double base = crosslayer::required_bitrate(p);
    p.tolerable_delay *= k;
    scaling += std::abs(crosslayer::required_bitrate(p) - base / k) <= 1e-12 * base / k;
  }
  o.check(scaling == kCases, fmt::format("inverse t_D2 scaling {}/{}", scaling, kCases));

  int monotone = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto p = params();
    const double rb = crosslayer::required_bitrate(p);
    const auto fr = crosslayer::frames_per_trigger(p, true);
    bool ok = true;
    auto q = p;
    q.frame_efficiency = std::min(1.0, p.frame_efficiency * real(1.0, 2.0));
    ok = ok && crosslayer::required_bitrate(q) <= rb;
    q = p;
    q.frame_len += static_cast<double>(integer(1, 512));
    ok = ok && crosslayer::frames_per_trigger(q, true) <= fr;
    q = p;
    q.trigger_payload *= real(1.0, 3.0);
    ok = ok && crosslayer::required_bitrate(q) >= rb;
    q = p;
    q.duty_cycle = std::min(1.0, p.duty_cycle * real(1.0, 5.0));
    ok = ok && crosslayer::required_bitrate(q) <= rb;
    q = p;
    q.split_ratio *= real(1.0, 3.0);
    ok = ok && crosslayer::required_bitrate(q) >= rb;
    q = p;
    q.frame_error_rate = std::min(0.99, p.frame_error_rate + real(0.0, 0.4));
    ok = ok && crosslayer::required_bitrate(q) >= rb;
    monotone += ok;
  }
  o.check(monotone == kCases, fmt::format("monotonicity in six axes {}/{}", monotone, kCases));

  int conserved = 0, deterministic = 0;
  for (int i = 0; i < kCases; ++i) {
    simulator::SimConfig c;
    c.frame = frames::split_payload(integer(16, 256), real(0.5, 1.0), real(0.2, 4.0));
    c.duty_cycle = real(0.05, 1.0);
    c.bitrate = real(500.0, 5e4);
    const double period =
        8.0 * static_cast<double>(c.frame.total_len()) / c.bitrate / c.duty_cycle;
    c.continuous_rate = integer(0, 1) ? real(0.0, 12.0 * c.frame.payload_len() / period) : 0.0;
    c.trigger_payload = integer(1, 40 * c.frame.d2_len());
    c.duration = period * static_cast<double>(integer(0, 150));
    c.trigger_rate = real(0.0, 5.0) / std::max(c.duration, period);
    c.frame_error_rate = integer(0, 1) ? real(0.0, 0.6) : 0.0;
    c.mode = integer(0, 1) ? simulator::RetransmissionMode::kPersistent
                           : simulator::RetransmissionMode::kSingleRetry;
    c.node_count = static_cast<std::size_t>(integer(2, 5));
    c.seed = static_cast<std::uint64_t>(integer(0, 1'000'000));
    c.drain = integer(0, 1) == 1;
    c.max_drain_cycles = 5000;
    c.record_trace = true;
    c.threads = 1;
    const auto a = simulator::run(c);
    c.threads = 4;
    const auto b = simulator::run(c);
    bool balanced = a.continuous.balanced() && a.intermittent.balanced();
    for (const auto& n : a.nodes) {
      balanced = balanced && n.continuous.balanced() && n.intermittent.balanced();
    }
    conserved += balanced;
    deterministic += a.nodes == b.nodes && a.trace == b.trace &&
                     a.deliveries.size() == b.deliveries.size();
  }
  o.check(conserved == kCases, fmt::format("byte conservation {}/{}", conserved, kCases));
  o.check(deterministic == kCases,
          fmt::format("seeded determinism, 1 vs 4 threads {}/{}", deterministic, kCases));

  int oracle = 0, drawn = 0;
  while (drawn < kCases) {
    const auto a = integer(30, 100), lf = integer(8, 256), b = integer(10, 1000);
    const auto m = integer(0, 1) ? 0 : integer(1, 20);
    const std::int64_t num = a * lf * 100, den = (100 + b) * (100 + m);
    const std::int64_t max_payload = 19 * num / den;
    if (max_payload < 1) continue;
    const auto payload = integer(1, max_payload);
    crosslayer::DesignParams p;
    p.frame_efficiency = a / 100.0;
    p.frame_len = static_cast<double>(lf);
    p.split_ratio = b / 100.0;
    p.frame_error_rate = m / 100.0;
    p.trigger_payload = static_cast<double>(payload);
    oracle += crosslayer::frames_per_trigger(p, true) == brute_force_frames(payload, num, den);
    ++drawn;
  }
  o.check(oracle == kCases,
          fmt::format("frames_per_trigger vs byte-by-byte oracle (< 20 frames) {}/{}", oracle,
                      kCases));
  return o;
}

Outcome ac7_throughput_cross_check() {
  Outcome o;
  const auto catalog = crosslayer::builtin_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [](const auto& t) { return t.name == "LoRa-SF7"; });
  if (it == catalog.end()) {
    o.check(false, "catalog has no LoRa-SF7 entry");
    return o;
  }
  const double duty = 0.121;
  const double payload_share = crosslayer::DesignParams{}.frame_efficiency;
  const double daily = it->max_bitrate * duty * payload_share * kSecondsPerDay / kBitsPerByte;
  const double yearly = daily * 365.0 * 1600.0;
  o.check(daily >= 6e6, fmt::format("{} at {} bps, duty {}, payload share {}: {:.3f} MB/node/day "
                                    "(>= 6 MB)",
                                    it->name, it->max_bitrate, duty, payload_share, daily / 1e6));
  o.check(std::abs(yearly - 3.5e12) <= 0.10 * 3.5e12,
          fmt::format("1600 nodes x 365 days: {:.3f} TB vs 3.5 TB ({:+.1f}%, within 10%)",
                      yearly / 1e12, 100 * (yearly - 3.5e12) / 3.5e12));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 bit-rate goldens", ac1_bitrate_goldens},
      {"AC2 rate and volume table", ac2_rate_table},
      {"AC3 trigger payloads", ac3_trigger_payloads},
      {"AC4 gateway and opex goldens", ac4_topology_cost},
      {"AC5 simulator vs formula", ac5_simulator_vs_formula},
      {"AC6 property suites", ac6_properties},
      {"AC7 LoRa throughput cross-check", ac7_throughput_cross_check},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.check(false, std::string("threw: ") + e.what());
    }
    failures += !o.pass;
    std::string detail;
    for (const auto& d : o.details) detail += (detail.empty() ? "" : "; ") + d;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
