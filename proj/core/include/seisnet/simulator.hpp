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

// Cycle-quantized simulation of the duty-cycled dual-stream protocol.
//
// Every node owns one transmission opportunity per cycle t_o = t_f + t_off,
// starting at t = 0. At each opportunity a node sends one frame:
//   - a pending resend of a damaged frame, if any; otherwise
//   - with triggered data queued: d1 <- continuous buffer, d2 <- up to L_d2
//     queued trigger bytes (FIFO, spanning triggers), any d2 remainder padded
//     with continuous bytes;
//   - with no triggered data queued: d1 + d2 <- continuous buffer.
// A node with nothing to send stays silent. Frames are damaged independently
// with probability lambda_f. Nodes share no channel and are simulated
// independently, each with RNG streams derived from (seed, node index).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <seisnet/crosslayer.hpp>
#include <seisnet/frames.hpp>
#include <seisnet/units.hpp>

namespace seisnet::simulator {

enum class RetransmissionMode {
  /// A damaged frame is resent once at the next opportunity and that resend
  /// always gets through. Damaged draws for resends are counted as
  /// violations of the single-resend assumption.
  kSingleRetry,
  /// Resend until an undamaged draw.
  kPersistent,
};

const char* to_string(RetransmissionMode m) noexcept;

/// A deterministic trigger at `time`; applies to every node unless `node`
/// is set.
struct Injection {
  Seconds time = 0.0;
  std::optional<std::size_t> node;
  bool operator==(const Injection&) const = default;
};

struct SimConfig {
  frames::FrameSpec frame{13, 58, 57};
  double duty_cycle = 0.01;
  BitsPerSecond bitrate = 10770.0;
  BitsPerSecond continuous_rate = 0.0;
  /// Mean Poisson trigger rate per node; 0 disables random arrivals.
  double trigger_rate = 0.0;
  Bytes trigger_payload = 216000;
  double frame_error_rate = 0.0;
  RetransmissionMode mode = RetransmissionMode::kSingleRetry;
  Seconds duration = kSecondsPerDay;
  std::size_t node_count = 1;
  std::uint64_t seed = 1;
  std::vector<Injection> injections;
  /// Keep transmitting after `duration` (no new data) until every queued
  /// trigger is delivered, for at most `max_drain_cycles` extra cycles.
  bool drain = false;
  std::int64_t max_drain_cycles = 10'000'000;
  bool record_trace = false;
  unsigned threads = 0;

  /// Throws kInvalidFrame for an empty payload and kPrecondition otherwise.
  void validate() const;
  frames::DutyCycle duty() const;
};

struct TriggerDelivery {
  std::size_t node = 0;
  std::uint64_t trigger_id = 0;
  Seconds arrival = 0.0;
  /// End of the completing cycle minus arrival (whole cycles, as in the
  /// analytical delay).
  Seconds delay = 0.0;
  /// End of the completing frame's airtime minus arrival (no trailing t_off).
  Seconds delay_last_byte = 0.0;
  std::int64_t frames_used = 0;
};

struct ByteLedger {
  Bytes generated = 0;
  Bytes delivered = 0;
  Bytes buffered = 0;   ///< waiting at the node (buffer or trigger queue)
  Bytes in_flight = 0;  ///< inside a damaged frame awaiting resend

  bool balanced() const noexcept { return generated == delivered + buffered + in_flight; }
  ByteLedger& operator+=(const ByteLedger& o) noexcept;
  bool operator==(const ByteLedger&) const = default;
};

struct NodeStats {
  std::size_t node = 0;
  std::int64_t cycles = 0;
  std::int64_t frames_sent = 0;
  std::int64_t frames_damaged = 0;
  std::int64_t frames_retransmitted = 0;
  std::int64_t retry_violations = 0;
  std::int64_t triggers_generated = 0;
  std::int64_t triggers_delivered = 0;
  ByteLedger continuous;
  ByteLedger intermittent;
  Bytes max_buffer = 0;
  double mean_buffer = 0.0;
  bool buffer_unstable = false;
  BitsPerSecond throughput = 0.0;

  bool operator==(const NodeStats&) const = default;
};

struct TraceRow {
  Seconds time = 0.0;
  std::size_t node = 0;
  std::int64_t frame_no = 0;
  bool flag = false;
  Bytes d1_bytes = 0;
  Bytes d2_bytes = 0;
  bool damaged = false;
  bool retry = false;
  bool operator==(const TraceRow&) const = default;
};

struct SimReport {
  SimConfig config;
  Seconds cycle_period = 0.0;
  Seconds frame_time = 0.0;
  Seconds elapsed = 0.0;
  std::vector<TriggerDelivery> deliveries;
  std::vector<NodeStats> nodes;
  std::int64_t frames_sent = 0;
  std::int64_t frames_damaged = 0;
  std::int64_t frames_retransmitted = 0;
  std::int64_t retry_violations = 0;
  std::int64_t triggers_generated = 0;
  ByteLedger continuous;
  ByteLedger intermittent;
  Bytes max_buffer = 0;
  double mean_buffer = 0.0;
  bool buffer_unstable = false;
  BitsPerSecond aggregate_throughput = 0.0;
  std::vector<TraceRow> trace;
  std::vector<std::string> warnings;

  /// Damaged over sent frames; 0 when nothing was sent.
  double empirical_fer() const noexcept;
};

/// Runs every node (concurrently when config.threads != 1) and merges the
/// per-node results in node order. Identical configs give identical reports.
SimReport run(const SimConfig& config);

struct AnalyticalComparison {
  /// True when no trigger was delivered; the statistics are then zero.
  bool empty = true;
  std::size_t samples = 0;
  Seconds predicted = 0.0;  ///< total_trigger_delay(p, R_b)
  Seconds mean_delay = 0.0;
  Seconds median_delay = 0.0;
  Seconds p95_delay = 0.0;
  Seconds max_delay = 0.0;
  Seconds mean_delay_last_byte = 0.0;
  double relative_error = 0.0;            ///< (mean - predicted) / predicted
  double relative_error_last_byte = 0.0;
  std::int64_t retry_violations = 0;
  bool single_retry_held = true;
};

/// Compares empirical delays with the analytical burst delay for `p` at
/// `bitrate`. Throws kParameterMismatch when `p` (through split_payload) or
/// the bitrate does not describe the simulated configuration.
AnalyticalComparison compare_to_analytical(const SimReport& report,
                                           const crosslayer::DesignParams& p,
                                           BitsPerSecond bitrate);

struct BufferEstimate {
  /// False when the run had no continuous stream (r_c = 0) or no samples.
  bool defined = false;
  /// Maximum pre-send buffer occupancy as seconds of generation, 8 B / r_c.
  Seconds seconds = 0.0;
  bool unstable = false;
};

BufferEstimate required_buffer(const SimReport& report);

/// Writes `time,node,frame_no,flag,d1_bytes,d2_bytes,damaged,retry` rows.
void write_trace_csv(std::ostream& out, const SimReport& report);

}  // namespace seisnet::simulator
