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

#include <compare>
#include <cstdint>
#include <string>

namespace seisnet::cost {

/// Currency in integer minor units (cents).
struct Money {
  std::int64_t cents = 0;

  static constexpr Money dollars(std::int64_t d) { return Money{d * 100}; }
  double as_dollars() const noexcept { return static_cast<double>(cents) / 100.0; }

  auto operator<=>(const Money&) const = default;
};

struct CostModel {
  std::int64_t node_count = 0;
  Money node_unit_price;
  std::int64_t gateway_count = 0;
  Money gateway_unit_price;
  std::int64_t extra_mast_count = 0;
  Money mast_unit_price;
  Money subscription_per_node_year;
  std::int64_t years = 1;

  /// Throws kPrecondition on negative counts or prices, or years < 1.
  void validate() const;
  bool operator==(const CostModel&) const = default;
};

/// nodes + gateways + masts + years x nodes x subscription, in exact integer
/// arithmetic. Throws kPrecondition on overflow.
Money total_opex(const CostModel& m);

/// Private LoRa network: 1600 nodes at $10, 45 gateways at $1,000.
CostModel lora_reference();
/// Operator NB-IoT network: 1600 nodes at $5, 5 extra masts at $20,000,
/// $30 per node per year.
CostModel nbiot_reference();

/// Echoed in every cost report.
inline constexpr const char* kMaintenanceDisclaimer =
    "excludes maintenance (personnel, vehicles, equipment failure, land-owner "
    "issues, vandalism); these apply equally to every option";

std::string format_money(Money m);

}  // namespace seisnet::cost
