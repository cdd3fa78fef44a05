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

// Frame geometry and the static time/size arithmetic of a duty-cycled link.
//
// A frame is a header followed by two payload fields. When the trigger flag
// is set, d1 carries the continuous stream and d2 carries intermittent
// (triggered) data; otherwise both fields carry continuous data.
//
//   | header (L_h) | d1 (L_d1) | d2 (L_d2) |
//   |<------------- L_f ------------------>|

#include <seisnet/units.hpp>

namespace seisnet::frames {

enum class TriggerFlag : bool { kContinuousOnly = false, kIntermittent = true };

class FrameSpec {
 public:
  /// Throws kInvalidFrame on negative lengths.
  FrameSpec(Bytes header_len, Bytes d1_len, Bytes d2_len);

  Bytes total_len() const noexcept { return header_len_ + d1_len_ + d2_len_; }
  Bytes header_len() const noexcept { return header_len_; }
  Bytes payload_len() const noexcept { return d1_len_ + d2_len_; }
  Bytes d1_len() const noexcept { return d1_len_; }
  Bytes d2_len() const noexcept { return d2_len_; }

  /// L_d1 / L_d2 as realized by the integral split. Infinite when d2 is empty.
  double achieved_split_ratio() const noexcept;

  bool operator==(const FrameSpec&) const = default;

 private:
  Bytes header_len_;
  Bytes d1_len_;
  Bytes d2_len_;
};

/// (L_d1 + L_d2) / L_f. Throws kInvalidFrame for an empty frame or payload.
double frame_efficiency(const FrameSpec& spec);

/// Builds an integral frame from a target efficiency and split ratio:
///   L_d  = round(eta * L_f)
///   L_d2 = floor(L_d / (1 + rho)),  L_d1 = L_d - L_d2,  L_h = L_f - L_d
/// L_d2 rounds down so the continuous field absorbs the remainder.
/// Throws kPrecondition on out-of-range inputs and kUnsatisfiableSplit when
/// the rounding leaves d2 empty.
FrameSpec split_payload(Bytes total_len, double efficiency, double split_ratio);

/// 8 * length / bitrate. Throws kInvalidRate unless bitrate > 0.
Seconds frame_airtime(double length_bytes, BitsPerSecond bitrate);

/// On/off timing of one transmission cycle; t_on is the frame airtime.
class DutyCycle {
 public:
  /// Throws kPrecondition unless t_on > 0 and t_off >= 0.
  DutyCycle(Seconds t_on, Seconds t_off);

  /// t_off = t_f (1/duty - 1). Throws kPrecondition unless 0 < duty <= 1.
  static DutyCycle from_frame_time(Seconds frame_time, double duty);

  Seconds t_on() const noexcept { return t_on_; }
  Seconds t_off() const noexcept { return t_off_; }
  /// t_o = t_on + t_off.
  Seconds period() const noexcept { return t_on_ + t_off_; }
  double ratio() const noexcept { return t_on_ / (t_on_ + t_off_); }

 private:
  Seconds t_on_;
  Seconds t_off_;
};

}  // namespace seisnet::frames
