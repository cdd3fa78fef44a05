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

#include <seisnet/scenarios.hpp>

#include <cmath>

#include <seisnet/error.hpp>

namespace seisnet::scenarios {

using detail::fail;
using detail::require;

void SensorSpec::validate() const {
  require(components >= 1 && components <= 3, ErrorCode::kPrecondition,
          "sensor components must be 1, 2 or 3");
  require(bits_per_sample >= 1 && bits_per_sample <= 32, ErrorCode::kPrecondition,
          "sensor bits_per_sample must lie in [1, 32]");
  require(std::isfinite(sample_rate) && sample_rate > 0.0, ErrorCode::kPrecondition,
          "sensor sample_rate must be positive");
}

StreamModel StreamModel::continuous(SensorSpec sensor, Seconds campaign_seconds) {
  StreamModel s;
  s.kind = StreamKind::kContinuous;
  s.sensor = sensor;
  s.campaign_seconds = campaign_seconds;
  s.validate();
  return s;
}

StreamModel StreamModel::intermittent(SensorSpec sensor, double triggers_per_year,
                                      Seconds record_seconds) {
  StreamModel s;
  s.kind = StreamKind::kIntermittent;
  s.sensor = sensor;
  s.triggers_per_year = triggers_per_year;
  s.record_seconds = record_seconds;
  s.validate();
  return s;
}

void StreamModel::validate() const {
  sensor.validate();
  if (kind == StreamKind::kIntermittent) {
    require(std::isfinite(triggers_per_year) && triggers_per_year > 0.0,
            ErrorCode::kPrecondition, "intermittent stream needs triggers_per_year > 0");
    require(std::isfinite(record_seconds) && record_seconds > 0.0,
            ErrorCode::kPrecondition, "intermittent stream needs record_seconds > 0");
  } else {
    require(campaign_seconds >= 0.0 && campaign_seconds <= kSecondsPerYear,
            ErrorCode::kPrecondition, "campaign_seconds must lie in [0, one year]");
  }
}

void ScenarioProfile::validate() const {
  require(node_count >= 1, ErrorCode::kPrecondition, "profile node_count must be >= 1");
  require(!streams.empty(), ErrorCode::kPrecondition, "profile has no streams");
  for (const auto& s : streams) s.validate();
}

BitsPerSecond stream_bitrate(const StreamModel& s) {
  s.validate();
  return static_cast<double>(s.sensor.bits_per_sample) *
         static_cast<double>(s.sensor.components) * s.sensor.sample_rate;
}

double yearly_volume(const StreamModel& s) {
  const double bytes_per_second = stream_bitrate(s) / kBitsPerByte;
  if (s.kind == StreamKind::kContinuous) {
    const Seconds active = s.campaign_seconds > 0.0 ? s.campaign_seconds : kSecondsPerYear;
    return active * bytes_per_second;
  }
  return s.triggers_per_year * s.record_seconds * bytes_per_second;
}

double trigger_payload(const StreamModel& s) {
  if (s.kind != StreamKind::kIntermittent) {
    fail(ErrorCode::kWrongStreamKind, "trigger_payload needs an intermittent stream");
  }
  return s.record_seconds * stream_bitrate(s) / kBitsPerByte;
}

double network_yearly_volume(const ScenarioProfile& profile) {
  profile.validate();
  double per_node = 0.0;
  for (const auto& s : profile.streams) per_node += yearly_volume(s);
  return static_cast<double>(profile.node_count) * per_node;
}

BitsPerSecond continuous_rate(const ScenarioProfile& profile) {
  double total = 0.0;
  for (const auto& s : profile.streams) {
    if (s.kind == StreamKind::kContinuous) total += stream_bitrate(s);
  }
  return total;
}

double triggers_per_year(const ScenarioProfile& profile) {
  for (const auto& s : profile.streams) {
    if (s.kind == StreamKind::kIntermittent) return s.triggers_per_year;
  }
  return 0.0;
}

std::vector<ScenarioProfile> builtin_profiles() {
  const SensorSpec full{3, 24, 150.0};
  const SensorSpec ansi{1, 4, 100.0};
  // QC report of 8 bytes: 8 bit x 1 component x 8 sps over 1 s.
  const SensorSpec qc_report{1, 8, 8.0};

  return {
      {"GMM", 100, {10, 100}, {1000, 20000}, {100, 1000}, Operation::kOnDemand,
       {StreamModel::intermittent(full, 500.0, 120.0)}},
      {"ANSI", 1000, {1000, 10000}, {100, 1000}, {1, 100}, Operation::kContinuous,
       {StreamModel::continuous(ansi)}},
      {"MFM", 100, {100, 500}, {50, 100}, {1, 1}, Operation::kBoth,
       {StreamModel::continuous(SensorSpec{3, 24, 200.0}, 4 * kSecondsPerHour)}},
      {"QCLS", 100000, {100000, 500000}, {10, 200}, {100, 100}, Operation::kBoth,
       {StreamModel::intermittent(qc_report, 365.0, 1.0)}},
  };
}

ScenarioProfile builtin_profile(const std::string& name) {
  for (auto& p : builtin_profiles()) {
    if (p.name == name) return p;
  }
  if (name == "groningen") return groningen_profile();
  fail(ErrorCode::kPrecondition, "unknown scenario profile '" + name + "'");
}

ScenarioProfile groningen_profile() {
  return {"groningen",
          1600,
          {1600, 1600},
          {1000, 1000},
          {1600, 1600},
          Operation::kBoth,
          {StreamModel::continuous(SensorSpec{1, 4, 100.0}),
           StreamModel::intermittent(SensorSpec{3, 24, 150.0}, 500.0, 120.0)}};
}

}  // namespace seisnet::scenarios
