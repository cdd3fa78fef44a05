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

// Bit-rate versus delivery-delay design equations for a duty-cycled link that
// multiplexes a continuous stream with triggered bursts, plus the
// feasibility criteria and an exhaustive search over candidate designs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <seisnet/units.hpp>

namespace seisnet::crosslayer {

/// One point in the design space. Lengths are real-valued bytes.
struct DesignParams {
  double frame_efficiency = 0.9;     ///< eta_f in (0, 1]
  double frame_len = 128.0;          ///< L_f
  double trigger_payload = 216e3;    ///< L_D2, full burst per trigger
  Seconds tolerable_delay = 36000.0; ///< t_D2
  double duty_cycle = 0.01;          ///< delta_c in (0, 1]
  double split_ratio = 1.0;          ///< rho_d = L_d1 / L_d2
  double frame_error_rate = 0.01;    ///< lambda_f in [0, 1)

  /// Throws kPrecondition naming the first violated bound.
  void validate() const;

  bool operator==(const DesignParams&) const = default;
};

/// Candidate values for one design axis, ascending.
struct Axis {
  std::vector<double> values;

  static Axis single(double v) { return Axis{{v}}; }
  /// Deduplicated {low, mid, high}; throws kPrecondition unless low <= mid <= high.
  static Axis low_mid_high(double low, double mid, double high);

  bool operator==(const Axis&) const = default;
};

struct ParamRanges {
  Axis frame_efficiency;
  Axis frame_len;
  Axis trigger_payload;
  Axis tolerable_delay;
  Axis duty_cycle;
  Axis split_ratio;
  Axis frame_error_rate;

  /// Every axis non-empty, ascending, and each value inside the DesignParams
  /// bounds. Throws kPrecondition.
  void validate() const;
  std::size_t grid_size() const;

  /// The published low/mid/high table (7 axes x 3 values).
  static ParamRanges table3();
  static ParamRanges single(const DesignParams& p);

  bool operator==(const ParamRanges&) const = default;
};

enum class Band { kLicensed, kUnlicensed };

struct TechnologyEntry {
  std::string name;
  BitsPerSecond max_bitrate = 0.0;
  double max_duty_cycle = 1.0;
  Band band = Band::kUnlicensed;
  bool subscription_required = false;

  void validate() const;
  bool operator==(const TechnologyEntry&) const = default;
};

/// LoRa (50 kbps top rate, 12.1% summed sub-band duty), LoRa at SF7/125 kHz
/// (5.47 kbps, 12.1%) and NB-IoT (200 kbps, licensed, no duty limit).
std::vector<TechnologyEntry> builtin_catalog();

enum class Criterion {
  kDeliveredBeforeNextTrigger,
  kBufferSustainable,
  kTechnologyMatch,
};

const char* to_string(Criterion c) noexcept;

struct CriterionResult {
  Criterion criterion;
  bool passed = false;
  std::string reason;
  std::vector<std::string> warnings;
};

struct DesignOutcome {
  DesignParams params;
  BitsPerSecond required_bitrate = 0.0;
  std::int64_t frames_needed = 0;  ///< gamma-bar
  Seconds total_delay = 0.0;       ///< total_trigger_delay at required_bitrate
  std::array<CriterionResult, 3> criteria;
  std::vector<TechnologyEntry> matched;

  bool feasible() const noexcept;
};

/// gamma (lossless) or gamma-bar (one resend per damaged frame):
///   ceil(L_D2 (1 + rho) [(1 + lambda)] / (eta L_f))
std::int64_t frames_per_trigger(const DesignParams& p, bool with_loss);

/// gamma-bar duty cycles of t_o = 8 L_f / (R_b delta_c).
Seconds total_trigger_delay(const DesignParams& p, BitsPerSecond bitrate);

/// Smallest rate delivering a burst within t_D2:
///   R_b = 8 L_f / (delta_c t_D2) * gamma-bar
BitsPerSecond required_bitrate(const DesignParams& p);

/// Evaluates the three feasibility criteria for a design at `bitrate`.
///
/// 1. The burst is delivered within the mean trigger inter-arrival time.
/// 2. The link payload rate R_b eta_f is not below the continuous generation
///    rate. Duty-cycled shortfalls (delta_c R_b eta_f, and the d1-only share
///    while a burst drains) are reported as warnings.
/// 3. At least one catalog entry supports R_b at duty cycle delta_c. An empty
///    catalog fails this criterion rather than throwing.
///
/// `continuous_rate` may be zero (no continuous stream).
DesignOutcome check_feasibility(const DesignParams& p, BitsPerSecond bitrate,
                                BitsPerSecond continuous_rate,
                                double triggers_per_second,
                                const std::vector<TechnologyEntry>& catalog);

enum class Objective { kMinBitrate, kMinDelay };

struct SearchResult {
  /// Feasible outcomes in objective order; ties by smaller duty cycle, then
  /// smaller split ratio, then the remaining axes ascending.
  std::vector<DesignOutcome> feasible;
  /// Non-dominated feasible outcomes over (R_b, t_D2), ascending R_b.
  std::vector<DesignOutcome> pareto;
  /// Infeasible candidates in grid order, each with its failing criteria.
  std::vector<DesignOutcome> rejected;
  std::size_t evaluated = 0;
};

/// Exhaustive evaluation of the Cartesian grid. `threads == 0` picks the
/// hardware concurrency; results do not depend on the thread count.
SearchResult design_search(const ParamRanges& ranges, Objective objective,
                           BitsPerSecond continuous_rate,
                           double triggers_per_second,
                           const std::vector<TechnologyEntry>& catalog,
                           unsigned threads = 0);

}  // namespace seisnet::crosslayer
