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

#include <cstdint>
#include <limits>

#include <gtest/gtest.h>

#include <seisnet/cost.hpp>
#include <seisnet/error.hpp>

#include "test_util.hpp"

namespace seisnet::cost {
namespace {

using seisnet::testing::code_of;

TEST(TotalOpex, ReferenceRows) {
  EXPECT_EQ(total_opex(lora_reference()), Money::dollars(61'000));
  EXPECT_EQ(total_opex(nbiot_reference()), Money::dollars(156'000));
}

TEST(TotalOpex, ZeroModel) { EXPECT_EQ(total_opex(CostModel{}), Money{0}); }

TEST(TotalOpex, SubscriptionScalesWithYears) {
  CostModel m = nbiot_reference();
  m.years = 3;
  // 8000 + 100000 + 1600 * 30 * 3
  EXPECT_EQ(total_opex(m), Money::dollars(252'000));
}

TEST(TotalOpex, CentsAreExact) {
  CostModel m;
  m.node_count = 3;
  m.node_unit_price = Money{10};  // $0.10
  EXPECT_EQ(total_opex(m).cents, 30);
  EXPECT_EQ(format_money(total_opex(m)), "$0.30");
}

TEST(TotalOpex, InvalidModelsRejected) {
  CostModel m;
  m.node_count = -1;
  EXPECT_EQ(code_of([&] { total_opex(m); }), ErrorCode::kPrecondition);
  m = CostModel{};
  m.gateway_unit_price = Money{-1};
  EXPECT_EQ(code_of([&] { total_opex(m); }), ErrorCode::kPrecondition);
  m = CostModel{};
  m.years = 0;
  EXPECT_EQ(code_of([&] { total_opex(m); }), ErrorCode::kPrecondition);
}

TEST(TotalOpex, OverflowDetected) {
  CostModel m;
  m.node_count = std::numeric_limits<std::int64_t>::max() / 2;
  m.node_unit_price = Money{3};
  EXPECT_EQ(code_of([&] { total_opex(m); }), ErrorCode::kPrecondition);
}

TEST(FormatMoney, Grouping) {
  EXPECT_EQ(format_money(Money::dollars(61'000)), "$61,000");
  EXPECT_EQ(format_money(Money::dollars(156'000)), "$156,000");
  EXPECT_EQ(format_money(Money::dollars(1'234'567)), "$1,234,567");
  EXPECT_EQ(format_money(Money{5}), "$0.05");
  EXPECT_EQ(format_money(Money{-12'345}), "-$123.45");
  EXPECT_EQ(format_money(Money{0}), "$0");
}

TEST(Money, Ordering) {
  EXPECT_LT(Money::dollars(1), Money{101});
  EXPECT_DOUBLE_EQ(Money{150}.as_dollars(), 1.5);
}

TEST(Disclaimer, MentionsPersonnelAndVehicles) {
  const std::string d = kMaintenanceDisclaimer;
  EXPECT_NE(d.find("personnel"), std::string::npos);
  EXPECT_NE(d.find("vehicles"), std::string::npos);
}

}  // namespace
}  // namespace seisnet::cost
