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

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace seisnet {

// Lengths are bytes, rates bits per second, times seconds. Multiples are SI
// decimal (1 kB = 1000 B).
using Bytes = std::int64_t;
using Seconds = double;
using BitsPerSecond = double;

inline constexpr double kBitsPerByte = 8.0;
inline constexpr Seconds kSecondsPerHour = 3600.0;
inline constexpr Seconds kSecondsPerDay = 24.0 * kSecondsPerHour;
/// 365 days; no leap handling.
inline constexpr Seconds kSecondsPerYear = 365.0 * kSecondsPerDay;

inline constexpr double kKilo = 1e3;
inline constexpr double kMega = 1e6;
inline constexpr double kGiga = 1e9;
inline constexpr double kTera = 1e12;

/// Ceiling that treats values within floating-point noise of an integer as
/// that integer, so that e.g. 230.4 / 115.2 yields 2 rather than 3.
inline std::int64_t snapped_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

}  // namespace seisnet
