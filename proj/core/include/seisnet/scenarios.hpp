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

// Data-generation models for the four seismic applications: ground motion
// monitoring (GMM), ambient noise interferometry (ANSI), microseismic
// fracture monitoring (MFM) and quality control of land surveys (QCLS).

#include <cstdint>
#include <string>
#include <vector>

#include <seisnet/units.hpp>

namespace seisnet::scenarios {

struct SensorSpec {
  int components = 3;
  int bits_per_sample = 24;
  double sample_rate = 100.0;  ///< samples per second

  void validate() const;
  bool operator==(const SensorSpec&) const = default;
};

enum class StreamKind { kContinuous, kIntermittent };

struct StreamModel {
  StreamKind kind = StreamKind::kContinuous;
  SensorSpec sensor;
  double triggers_per_year = 0.0;      ///< intermittent only
  Seconds record_seconds = 0.0;        ///< per trigger, intermittent only
  /// Continuous only: recording time per year; 0 means the whole year.
  Seconds campaign_seconds = 0.0;

  static StreamModel continuous(SensorSpec sensor, Seconds campaign_seconds = 0.0);
  static StreamModel intermittent(SensorSpec sensor, double triggers_per_year,
                                  Seconds record_seconds);

  void validate() const;
  bool operator==(const StreamModel&) const = default;
};

enum class Operation { kOnDemand, kContinuous, kBoth };

struct Range {
  double low = 0.0;
  double high = 0.0;
  bool operator==(const Range&) const = default;
};

struct ScenarioProfile {
  std::string name;
  std::int64_t node_count = 1;
  Range node_range;
  Range spacing_m;
  Range area_km2;
  Operation operation = Operation::kContinuous;
  std::vector<StreamModel> streams;

  void validate() const;
  bool operator==(const ScenarioProfile&) const = default;
};

/// bits/sample x components x samples/second, the rate while recording.
BitsPerSecond stream_bitrate(const StreamModel& s);

/// Bytes generated per year (365 days).
double yearly_volume(const StreamModel& s);

/// Bytes recorded for one trigger. Throws kWrongStreamKind for a continuous
/// stream.
double trigger_payload(const StreamModel& s);

/// node_count x sum of per-stream yearly volumes. Throws kPrecondition when
/// the profile has no streams.
double network_yearly_volume(const ScenarioProfile& profile);

/// Sum of stream_bitrate over the continuous streams of a profile.
BitsPerSecond continuous_rate(const ScenarioProfile& profile);

/// Trigger rate of the first intermittent stream, per year; 0 if none.
double triggers_per_year(const ScenarioProfile& profile);

/// The four published application rows, in GMM, ANSI, MFM, QCLS order.
std::vector<ScenarioProfile> builtin_profiles();

/// Look up a built-in row by name (case-sensitive). Throws kPrecondition.
ScenarioProfile builtin_profile(const std::string& name);

/// Design-study network: 1600 nodes on a 40 km x 40 km grid, each with a
/// continuous ANSI stream (4 bit, 1 component, 100 sps) and a GMM stream
/// (24 bit, 3 components, 150 sps, 500 triggers/yr, 120 s per trigger).
ScenarioProfile groningen_profile();

}  // namespace seisnet::scenarios
