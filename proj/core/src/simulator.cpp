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

#include <seisnet/simulator.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <random>

#include <seisnet/error.hpp>
#include <seisnet/parallel.hpp>

namespace seisnet::simulator {

using detail::fail;
using detail::require;

const char* to_string(RetransmissionMode m) noexcept {
  return m == RetransmissionMode::kSingleRetry ? "single_retry" : "persistent";
}

ByteLedger& ByteLedger::operator+=(const ByteLedger& o) noexcept {
  generated += o.generated;
  delivered += o.delivered;
  buffered += o.buffered;
  in_flight += o.in_flight;
  return *this;
}

double SimReport::empirical_fer() const noexcept {
  if (frames_sent == 0) return 0.0;
  return static_cast<double>(frames_damaged) / static_cast<double>(frames_sent);
}

void SimConfig::validate() const {
  require(frame.payload_len() > 0, ErrorCode::kInvalidFrame, "frame payload is empty");
  const bool has_triggers = trigger_rate > 0.0 || !injections.empty();
  require(!has_triggers || frame.d2_len() > 0, ErrorCode::kInvalidFrame,
          "triggered data needs a non-empty d2 field");
  if (!(bitrate > 0.0) || !std::isfinite(bitrate)) {
    fail(ErrorCode::kInvalidRate, "bitrate must be positive");
  }
  require(duty_cycle > 0.0 && duty_cycle <= 1.0, ErrorCode::kPrecondition,
          "duty_cycle must lie in (0, 1]");
  require(std::isfinite(continuous_rate) && continuous_rate >= 0.0,
          ErrorCode::kPrecondition, "continuous_rate must be non-negative");
  require(std::isfinite(trigger_rate) && trigger_rate >= 0.0, ErrorCode::kPrecondition,
          "trigger_rate must be non-negative");
  require(trigger_payload >= 1, ErrorCode::kPrecondition, "trigger_payload must be >= 1");
  require(frame_error_rate >= 0.0 && frame_error_rate < 1.0, ErrorCode::kPrecondition,
          "frame_error_rate must lie in [0, 1)");
  require(std::isfinite(duration) && duration >= 0.0, ErrorCode::kPrecondition,
          "duration must be non-negative");
  require(node_count >= 1, ErrorCode::kPrecondition, "node_count must be >= 1");
  require(max_drain_cycles >= 0, ErrorCode::kPrecondition,
          "max_drain_cycles must be non-negative");
  for (const auto& inj : injections) {
    require(std::isfinite(inj.time) && inj.time >= 0.0, ErrorCode::kPrecondition,
            "injection time must be non-negative");
    require(!inj.node || *inj.node < node_count, ErrorCode::kPrecondition,
            "injection node out of range");
  }
}

frames::DutyCycle SimConfig::duty() const {
  return frames::DutyCycle::from_frame_time(
      frames::frame_airtime(static_cast<double>(frame.total_len()), bitrate), duty_cycle);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { kArrivals = 1, kDamage = 2 };

std::mt19937_64 node_rng(std::uint64_t seed, std::size_t node, Stream stream) {
  const std::uint64_t s =
      splitmix64(splitmix64(seed) ^ splitmix64(2 * static_cast<std::uint64_t>(node) +
                                               static_cast<std::uint64_t>(stream)));
  return std::mt19937_64(s);
}

// [0, 1) with 53 random bits; portable across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Trigger {
  Seconds arrival = 0.0;
  Bytes unframed = 0;     // not yet placed in any frame
  Bytes outstanding = 0;  // not yet delivered
  std::int64_t frames_used = 0;
};

struct Frame {
  bool flag = false;
  Bytes continuous = 0;
  Bytes d1 = 0;
  Bytes d2 = 0;
  std::vector<std::pair<std::size_t, Bytes>> parts;  // (trigger index, bytes)

  Bytes intermittent() const {
    Bytes s = 0;
    for (const auto& [idx, b] : parts) s += b;
    return s;
  }
};

struct NodeResult {
  NodeStats stats;
  std::vector<TriggerDelivery> deliveries;
  std::vector<TraceRow> trace;
  std::vector<std::string> warnings;
};

std::vector<Seconds> arrival_times(const SimConfig& cfg, std::size_t node) {
  std::vector<Seconds> times;
  if (cfg.trigger_rate > 0.0) {
    auto rng = node_rng(cfg.seed, node, Stream::kArrivals);
    Seconds t = 0.0;
    while (true) {
      t += -std::log1p(-uniform01(rng)) / cfg.trigger_rate;
      if (!(t < cfg.duration)) break;
      times.push_back(t);
    }
  }
  for (const auto& inj : cfg.injections) {
    if ((!inj.node || *inj.node == node) && inj.time < cfg.duration) {
      times.push_back(inj.time);
    }
  }
  std::stable_sort(times.begin(), times.end());
  return times;
}

class NodeSimulation {
 public:
  NodeSimulation(const SimConfig& cfg, std::size_t node, Seconds period, Seconds frame_time)
      : cfg_(cfg),
        node_(node),
        period_(period),
        frame_time_(frame_time),
        arrivals_(arrival_times(cfg, node)),
        damage_rng_(node_rng(cfg.seed, node, Stream::kDamage)) {
    result_.stats.node = node;
  }

  NodeResult run() {
    const Bytes per_cycle_generation = static_cast<Bytes>(
        std::ceil(period_ * cfg_.continuous_rate / kBitsPerByte));
    std::int64_t k = 0;
    std::int64_t drain_cycles = 0;
    Bytes mid_occupancy = -1;
    Bytes last_window_occupancy = 0;
    while (true) {
      const Seconds t = static_cast<double>(k) * period_;
      const bool in_window = t < cfg_.duration;
      if (!in_window) {
        if (!cfg_.drain) break;
        top_up(cfg_.duration);
        if (queue_.empty() && !pending_) break;
        if (drain_cycles >= cfg_.max_drain_cycles) {
          result_.warnings.push_back("node " + std::to_string(node_) +
                                     ": drain limit reached with data still queued");
          break;
        }
        ++drain_cycles;
      } else {
        top_up(t);
      }

      sample_buffer();
      if (in_window) {
        last_window_occupancy = buffer_;
        if (mid_occupancy < 0 && t >= cfg_.duration / 2.0) mid_occupancy = buffer_;
      }
      transmit(k, t);
      ++k;
    }
    top_up(cfg_.duration);

    auto& s = result_.stats;
    s.cycles = k;
    s.continuous = {continuous_generated_, continuous_delivered_, buffer_,
                    pending_ ? pending_->continuous : 0};
    Bytes queued = 0;
    for (std::size_t idx : queue_) queued += triggers_[idx].unframed;
    s.intermittent = {static_cast<Bytes>(triggers_.size()) * cfg_.trigger_payload,
                      intermittent_delivered_, queued,
                      pending_ ? pending_->intermittent() : 0};
    s.triggers_generated = static_cast<std::int64_t>(triggers_.size());
    s.max_buffer = max_buffer_;
    s.mean_buffer = samples_ > 0 ? buffer_sum_ / static_cast<double>(samples_) : 0.0;
    s.buffer_unstable =
        cfg_.continuous_rate > 0.0 && mid_occupancy >= 0 &&
        last_window_occupancy > 2 * (per_cycle_generation + cfg_.frame.payload_len()) &&
        static_cast<double>(last_window_occupancy) > 1.5 * static_cast<double>(mid_occupancy);
    const Seconds elapsed = std::max(cfg_.duration, static_cast<double>(k) * period_);
    s.throughput = elapsed > 0.0
                       ? kBitsPerByte *
                             static_cast<double>(continuous_delivered_ + intermittent_delivered_) /
                             elapsed
                       : 0.0;
    if (s.buffer_unstable) {
      result_.warnings.push_back("node " + std::to_string(node_) +
                                 ": continuous buffer grows without bound");
    }
    return std::move(result_);
  }

 private:
  // Accrues continuous bytes and trigger arrivals up to `horizon` seconds.
  void top_up(Seconds horizon) {
    horizon = std::min(horizon, cfg_.duration);
    const auto target =
        static_cast<Bytes>(std::floor(horizon * cfg_.continuous_rate / kBitsPerByte));
    if (target > continuous_generated_) {
      buffer_ += target - continuous_generated_;
      continuous_generated_ = target;
    }
    while (next_arrival_ < arrivals_.size() && arrivals_[next_arrival_] <= horizon) {
      triggers_.push_back({arrivals_[next_arrival_], cfg_.trigger_payload,
                           cfg_.trigger_payload, 0});
      queue_.push_back(triggers_.size() - 1);
      ++next_arrival_;
    }
  }

  void sample_buffer() {
    ++samples_;
    buffer_sum_ += static_cast<double>(buffer_);
    max_buffer_ = std::max(max_buffer_, buffer_);
  }

  Bytes take_continuous(Bytes want) {
    const Bytes got = std::min(want, buffer_);
    buffer_ -= got;
    return got;
  }

  std::optional<Frame> build_frame() {
    const auto& spec = cfg_.frame;
    Frame f;
    if (!queue_.empty()) {
      f.flag = true;
      f.d1 = take_continuous(spec.d1_len());
      f.continuous = f.d1;
      Bytes room = spec.d2_len();
      while (room > 0 && !queue_.empty()) {
        Trigger& trig = triggers_[queue_.front()];
        const Bytes take = std::min(room, trig.unframed);
        trig.unframed -= take;
        room -= take;
        f.parts.emplace_back(queue_.front(), take);
        if (trig.unframed == 0) queue_.pop_front();
      }
      const Bytes pad = take_continuous(room);
      f.continuous += pad;
      f.d2 = spec.d2_len() - room + pad;
    } else {
      const Bytes c = take_continuous(spec.payload_len());
      if (c == 0) return std::nullopt;
      f.continuous = c;
      f.d1 = std::min(c, spec.d1_len());
      f.d2 = c - f.d1;
    }
    return f;
  }

  void deliver(const Frame& f, std::int64_t k, Seconds t) {
    continuous_delivered_ += f.continuous;
    for (const auto& [idx, bytes] : f.parts) {
      Trigger& trig = triggers_[idx];
      trig.outstanding -= bytes;
      intermittent_delivered_ += bytes;
      if (trig.outstanding == 0) {
        TriggerDelivery d;
        d.node = node_;
        d.trigger_id = idx;
        d.arrival = trig.arrival;
        d.delay = static_cast<double>(k + 1) * period_ - trig.arrival;
        d.delay_last_byte = t + frame_time_ - trig.arrival;
        d.frames_used = trig.frames_used;
        result_.deliveries.push_back(d);
        ++result_.stats.triggers_delivered;
      }
    }
  }

  void transmit(std::int64_t k, Seconds t) {
    auto& s = result_.stats;
    Frame frame;
    bool retry = false;
    if (pending_) {
      frame = *pending_;
      pending_.reset();
      retry = true;
      ++s.frames_retransmitted;
    } else if (auto built = build_frame()) {
      frame = std::move(*built);
    } else {
      return;
    }

    ++s.frames_sent;
    for (const auto& [idx, bytes] : frame.parts) ++triggers_[idx].frames_used;
    const bool damaged = uniform01(damage_rng_) < cfg_.frame_error_rate;
    if (damaged) ++s.frames_damaged;

    if (cfg_.record_trace) {
      result_.trace.push_back({t, node_, s.frames_sent, frame.flag, frame.d1, frame.d2,
                               damaged, retry});
    }

    if (!damaged) {
      deliver(frame, k, t);
    } else if (retry && cfg_.mode == RetransmissionMode::kSingleRetry) {
      ++s.retry_violations;
      deliver(frame, k, t);
    } else {
      pending_ = std::move(frame);
    }
  }

  const SimConfig& cfg_;
  std::size_t node_;
  Seconds period_;
  Seconds frame_time_;
  std::vector<Seconds> arrivals_;
  std::size_t next_arrival_ = 0;
  std::mt19937_64 damage_rng_;

  std::vector<Trigger> triggers_;
  std::deque<std::size_t> queue_;
  std::optional<Frame> pending_;

  Bytes buffer_ = 0;
  Bytes continuous_generated_ = 0;
  Bytes continuous_delivered_ = 0;
  Bytes intermittent_delivered_ = 0;
  Bytes max_buffer_ = 0;
  double buffer_sum_ = 0.0;
  std::int64_t samples_ = 0;

  NodeResult result_;
};

}  // namespace

SimReport run(const SimConfig& config) {
  config.validate();
  const auto duty = config.duty();

  SimReport report;
  report.config = config;
  report.cycle_period = duty.period();
  report.frame_time = duty.t_on();

  if (config.trigger_rate > 0.0 && config.injections.empty() &&
      config.duration * config.trigger_rate < 1.0) {
    report.warnings.push_back("duration covers fewer than one expected trigger");
  }

  std::vector<NodeResult> results(config.node_count);
  detail::parallel_for(config.node_count, config.threads, [&](std::size_t i) {
    results[i] = NodeSimulation(config, i, duty.period(), duty.t_on()).run();
  });

  double buffer_sum = 0.0;
  std::int64_t cycles = 0;
  for (auto& r : results) {
    const auto& s = r.stats;
    report.frames_sent += s.frames_sent;
    report.frames_damaged += s.frames_damaged;
    report.frames_retransmitted += s.frames_retransmitted;
    report.retry_violations += s.retry_violations;
    report.triggers_generated += s.triggers_generated;
    report.continuous += s.continuous;
    report.intermittent += s.intermittent;
    report.max_buffer = std::max(report.max_buffer, s.max_buffer);
    buffer_sum += s.mean_buffer;
    report.buffer_unstable = report.buffer_unstable || s.buffer_unstable;
    report.aggregate_throughput += s.throughput;
    cycles = std::max(cycles, s.cycles);
    report.deliveries.insert(report.deliveries.end(), r.deliveries.begin(), r.deliveries.end());
    report.trace.insert(report.trace.end(), r.trace.begin(), r.trace.end());
    report.warnings.insert(report.warnings.end(), r.warnings.begin(), r.warnings.end());
    report.nodes.push_back(s);
  }
  report.mean_buffer = buffer_sum / static_cast<double>(config.node_count);
  report.elapsed = std::max(config.duration, static_cast<double>(cycles) * duty.period());
  return report;
}

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

Seconds nearest_rank(const std::vector<Seconds>& sorted, double q) {
  const auto n = sorted.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

}  // namespace

AnalyticalComparison compare_to_analytical(const SimReport& report,
                                           const crosslayer::DesignParams& p,
                                           BitsPerSecond bitrate) {
  p.validate();
  const auto& cfg = report.config;
  auto mismatch = [](const std::string& what) {
    fail(ErrorCode::kParameterMismatch, "compare_to_analytical: " + what);
  };
  if (!close(p.frame_len, static_cast<double>(cfg.frame.total_len()))) {
    mismatch("frame length differs");
  }
  try {
    const auto frame = frames::split_payload(cfg.frame.total_len(), p.frame_efficiency,
                                             p.split_ratio);
    if (!(frame == cfg.frame)) mismatch("efficiency/split ratio do not produce the simulated frame");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParameterMismatch) throw;
    mismatch(std::string("cannot split frame: ") + e.what());
  }
  if (!close(p.duty_cycle, cfg.duty_cycle)) mismatch("duty cycle differs");
  if (!close(p.trigger_payload, static_cast<double>(cfg.trigger_payload))) {
    mismatch("trigger payload differs");
  }
  if (!close(p.frame_error_rate, cfg.frame_error_rate)) mismatch("frame error rate differs");
  if (!close(bitrate, cfg.bitrate)) mismatch("bitrate differs");

  AnalyticalComparison cmp;
  cmp.predicted = crosslayer::total_trigger_delay(p, bitrate);
  cmp.retry_violations = report.retry_violations;
  cmp.single_retry_held = report.retry_violations == 0;
  cmp.samples = report.deliveries.size();
  cmp.empty = report.deliveries.empty();
  if (cmp.empty) return cmp;

  std::vector<Seconds> delays;
  delays.reserve(cmp.samples);
  double sum = 0.0;
  double sum_last = 0.0;
  for (const auto& d : report.deliveries) {
    delays.push_back(d.delay);
    sum += d.delay;
    sum_last += d.delay_last_byte;
  }
  std::sort(delays.begin(), delays.end());
  const auto n = static_cast<double>(cmp.samples);
  cmp.mean_delay = sum / n;
  cmp.mean_delay_last_byte = sum_last / n;
  cmp.median_delay = nearest_rank(delays, 0.5);
  cmp.p95_delay = nearest_rank(delays, 0.95);
  cmp.max_delay = delays.back();
  cmp.relative_error = (cmp.mean_delay - cmp.predicted) / cmp.predicted;
  cmp.relative_error_last_byte = (cmp.mean_delay_last_byte - cmp.predicted) / cmp.predicted;
  return cmp;
}

BufferEstimate required_buffer(const SimReport& report) {
  BufferEstimate est;
  const auto rc = report.config.continuous_rate;
  const bool sampled = std::any_of(report.nodes.begin(), report.nodes.end(),
                                   [](const NodeStats& s) { return s.cycles > 0; });
  if (!(rc > 0.0) || !sampled) return est;
  est.defined = true;
  est.seconds = static_cast<double>(report.max_buffer) * kBitsPerByte / rc;
  est.unstable = report.buffer_unstable;
  return est;
}

void write_trace_csv(std::ostream& out, const SimReport& report) {
  out << "time,node,frame_no,flag,d1_bytes,d2_bytes,damaged,retry\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : report.trace) {
    out << r.time << ',' << r.node << ',' << r.frame_no << ',' << (r.flag ? 1 : 0) << ','
        << r.d1_bytes << ',' << r.d2_bytes << ',' << (r.damaged ? 1 : 0) << ','
        << (r.retry ? 1 : 0) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace seisnet::simulator
