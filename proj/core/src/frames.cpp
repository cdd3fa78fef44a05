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

#include <seisnet/frames.hpp>

#include <cmath>
#include <limits>
#include <string>

#include <seisnet/error.hpp>

namespace seisnet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidFrame: return "invalid-frame";
    case ErrorCode::kUnsatisfiableSplit: return "unsatisfiable-split";
    case ErrorCode::kInvalidRate: return "invalid-rate";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kWrongStreamKind: return "wrong-stream-kind";
    case ErrorCode::kParameterMismatch: return "parameter-mismatch";
    case ErrorCode::kValidation: return "validation";
  }
  return "unknown";
}

namespace frames {

using detail::fail;
using detail::require;

FrameSpec::FrameSpec(Bytes header_len, Bytes d1_len, Bytes d2_len)
    : header_len_(header_len), d1_len_(d1_len), d2_len_(d2_len) {
  require(header_len >= 0 && d1_len >= 0 && d2_len >= 0,
          ErrorCode::kInvalidFrame, "frame lengths must be non-negative");
}

double FrameSpec::achieved_split_ratio() const noexcept {
  if (d2_len_ == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(d1_len_) / static_cast<double>(d2_len_);
}

double frame_efficiency(const FrameSpec& spec) {
  require(spec.total_len() > 0, ErrorCode::kInvalidFrame,
          "frame has zero total length");
  require(spec.payload_len() > 0, ErrorCode::kInvalidFrame,
          "frame has zero payload");
  return static_cast<double>(spec.payload_len()) /
         static_cast<double>(spec.total_len());
}

FrameSpec split_payload(Bytes total_len, double efficiency,
                        double split_ratio) {
  require(total_len >= 2, ErrorCode::kPrecondition,
          "split_payload: total length must be at least 2 bytes");
  require(efficiency > 0.0 && efficiency <= 1.0, ErrorCode::kPrecondition,
          "split_payload: efficiency must lie in (0, 1]");
  require(split_ratio > 0.0 && std::isfinite(split_ratio),
          ErrorCode::kPrecondition,
          "split_payload: split ratio must be positive");

  const auto payload =
      static_cast<Bytes>(std::llround(efficiency * static_cast<double>(total_len)));
  const auto d2 = static_cast<Bytes>(
      std::floor(static_cast<double>(payload) / (1.0 + split_ratio)));
  if (d2 < 1) {
    fail(ErrorCode::kUnsatisfiableSplit,
         "split_payload: L_f=" + std::to_string(total_len) +
             " leaves no room for d2 at the requested split ratio");
  }
  return FrameSpec(total_len - payload, payload - d2, d2);
}

Seconds frame_airtime(double length_bytes, BitsPerSecond bitrate) {
  if (!(bitrate > 0.0)) {
    fail(ErrorCode::kInvalidRate, "bitrate must be positive");
  }
  return kBitsPerByte * length_bytes / bitrate;
}

DutyCycle::DutyCycle(Seconds t_on, Seconds t_off) : t_on_(t_on), t_off_(t_off) {
  require(t_on > 0.0 && std::isfinite(t_on), ErrorCode::kPrecondition,
          "duty cycle: t_on must be positive");
  require(t_off >= 0.0 && std::isfinite(t_off), ErrorCode::kPrecondition,
          "duty cycle: t_off must be non-negative");
}

DutyCycle DutyCycle::from_frame_time(Seconds frame_time, double duty) {
  require(duty > 0.0 && duty <= 1.0, ErrorCode::kPrecondition,
          "duty cycle ratio must lie in (0, 1]");
  return DutyCycle(frame_time, frame_time * (1.0 / duty - 1.0));
}

}  // namespace frames
}  // namespace seisnet
