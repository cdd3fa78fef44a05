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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include <seisnet/crosslayer.hpp>
#include <seisnet/error.hpp>

#include "test_util.hpp"

namespace seisnet::crosslayer {
namespace {

using seisnet::testing::code_of;

DesignParams mid_case() { return DesignParams{}; }

std::set<std::string> names(const std::vector<TechnologyEntry>& v) {
  std::set<std::string> out;
  for (const auto& t : v) out.insert(t.name);
  return out;
}

std::vector<TechnologyEntry> lora_nbiot() {
  return {{"LoRa", 50e3, 0.121, Band::kUnlicensed, false},
          {"NB-IoT", 200e3, 1.0, Band::kLicensed, true}};
}

TEST(FramesPerTrigger, MidCaseWithLoss) {
  // ceil(216000 * 2 * 1.01 / 115.2) = ceil(3787.5)
  EXPECT_EQ(frames_per_trigger(mid_case(), true), 3788);
  // ceil(216000 * 2 / 115.2) = 3750 exactly
  EXPECT_EQ(frames_per_trigger(mid_case(), false), 3750);
}

TEST(FramesPerTrigger, OneFramePayloadNeedsTwoFrames) {
  DesignParams p;
  p.trigger_payload = 0.9 * 128;
  p.frame_error_rate = 0.0;
  EXPECT_EQ(frames_per_trigger(p, true), 2);
}

TEST(FramesPerTrigger, CeilingAbsorbsSmallLoss) {
  DesignParams p;
  p.trigger_payload = 100;
  p.frame_error_rate = 0.0;
  EXPECT_EQ(frames_per_trigger(p, true), 2);
  p.frame_error_rate = 0.01;
  EXPECT_EQ(frames_per_trigger(p, true), 2);
}

TEST(FramesPerTrigger, InvalidParamsRejected) {
  DesignParams p;
  p.frame_error_rate = 1.0;
  EXPECT_EQ(code_of([&] { frames_per_trigger(p, true); }), ErrorCode::kPrecondition);
  p = mid_case();
  p.frame_efficiency = 0.0;
  EXPECT_EQ(code_of([&] { frames_per_trigger(p, true); }), ErrorCode::kPrecondition);
  p = mid_case();
  p.duty_cycle = 1.5;
  EXPECT_EQ(code_of([&] { frames_per_trigger(p, true); }), ErrorCode::kPrecondition);
}

TEST(TotalTriggerDelay, MidCaseRoundTrip) {
  const double d = total_trigger_delay(mid_case(), 10770.0);
  EXPECT_NEAR(d, 36000.0, 36000.0 * 1e-3);
  EXPECT_NEAR(total_trigger_delay(mid_case(), required_bitrate(mid_case())), 36000.0, 1e-6);
}

TEST(TotalTriggerDelay, SingleAlwaysOnFrame) {
  DesignParams p;
  p.duty_cycle = 1.0;
  p.frame_error_rate = 0.0;
  p.trigger_payload = 1;
  EXPECT_DOUBLE_EQ(total_trigger_delay(p, 1024.0), 1.0);
}

TEST(TotalTriggerDelay, NonPositiveRateRejected) {
  EXPECT_EQ(code_of([] { total_trigger_delay(DesignParams{}, 0.0); }), ErrorCode::kInvalidRate);
}

TEST(RequiredBitrate, PublishedValues) {
  EXPECT_NEAR(required_bitrate(mid_case()), 10770.0, 10.0);
  EXPECT_NEAR(required_bitrate(mid_case()), 1024.0 / 360.0 * 3788.0, 1e-9);
  DesignParams p = mid_case();
  p.tolerable_delay = 3600.0;
  EXPECT_NEAR(required_bitrate(p), 107.7e3, 100.0);
}

TEST(RequiredBitrate, SingleFrameDelivery) {
  DesignParams p;
  p.frame_error_rate = 0.0;
  p.trigger_payload = 0.9 * 128 / 2;
  EXPECT_DOUBLE_EQ(required_bitrate(p), 8.0 * 128 / (0.01 * 36000.0));
}

TEST(CheckFeasibility, MidCaseAllPassBothMatched) {
  const auto o = check_feasibility(mid_case(), required_bitrate(mid_case()), 400.0,
                                   500.0 / kSecondsPerYear, lora_nbiot());
  EXPECT_TRUE(o.feasible());
  for (const auto& c : o.criteria) EXPECT_TRUE(c.passed) << c.reason;
  EXPECT_EQ(names(o.matched), (std::set<std::string>{"LoRa", "NB-IoT"}));
  EXPECT_EQ(o.frames_needed, 3788);
  // The duty-cycled payload share is below 400 bps; that is advisory only.
  EXPECT_FALSE(o.criteria[1].warnings.empty());
}

TEST(CheckFeasibility, OneHourOnlyNbIot) {
  DesignParams p = mid_case();
  p.tolerable_delay = 3600.0;
  const auto o = check_feasibility(p, required_bitrate(p), 400.0, 500.0 / kSecondsPerYear,
                                   lora_nbiot());
  EXPECT_TRUE(o.feasible());
  EXPECT_EQ(names(o.matched), std::set<std::string>{"NB-IoT"});
}

TEST(CheckFeasibility, StarvationFailsBufferCriterion) {
  const double rb = required_bitrate(mid_case());
  const auto o = check_feasibility(mid_case(), rb, rb, 500.0 / kSecondsPerYear, lora_nbiot());
  EXPECT_FALSE(o.criteria[1].passed);
  EXPECT_FALSE(o.feasible());
  EXPECT_TRUE(o.criteria[0].passed);
}

TEST(CheckFeasibility, FrequentTriggersFailDeliveryCriterion) {
  const auto o = check_feasibility(mid_case(), required_bitrate(mid_case()), 400.0,
                                   1.0 / 3600.0, lora_nbiot());
  EXPECT_FALSE(o.criteria[0].passed);
  EXPECT_NE(o.criteria[0].reason.find("trigger gap"), std::string::npos);
}

TEST(CheckFeasibility, DutyCycleLimitExcludesTechnology) {
  DesignParams p = mid_case();
  p.duty_cycle = 0.5;
  const auto o = check_feasibility(p, required_bitrate(p), 400.0, 500.0 / kSecondsPerYear,
                                   lora_nbiot());
  EXPECT_EQ(names(o.matched), std::set<std::string>{"NB-IoT"});
}

TEST(CheckFeasibility, EmptyCatalogReportedNotThrown) {
  const auto o = check_feasibility(mid_case(), 10770.0, 400.0, 500.0 / kSecondsPerYear, {});
  EXPECT_FALSE(o.criteria[2].passed);
  EXPECT_EQ(o.criteria[2].reason, "technology catalog is empty");
}

TEST(CheckFeasibility, BadInputsRejected) {
  EXPECT_EQ(code_of([] { check_feasibility(DesignParams{}, 0.0, 1.0, 1.0, {}); }),
            ErrorCode::kInvalidRate);
  EXPECT_EQ(code_of([] { check_feasibility(DesignParams{}, 1.0, -1.0, 1.0, {}); }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { check_feasibility(DesignParams{}, 1.0, 1.0, 0.0, {}); }),
            ErrorCode::kPrecondition);
}

TEST(Catalog, BuiltinEntries) {
  const auto c = builtin_catalog();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].name, "LoRa");
  EXPECT_DOUBLE_EQ(c[0].max_bitrate, 50e3);
  EXPECT_DOUBLE_EQ(c[0].max_duty_cycle, 0.121);
  EXPECT_EQ(c[2].name, "NB-IoT");
  EXPECT_TRUE(c[2].subscription_required);
  for (const auto& t : c) EXPECT_NO_THROW(t.validate());
}

TEST(ParamRanges, Table3Shape) {
  const auto r = ParamRanges::table3();
  EXPECT_EQ(r.grid_size(), 2187u);
  EXPECT_NO_THROW(r.validate());
  EXPECT_EQ(r.trigger_payload.values, (std::vector<double>{108e3, 162e3, 216e3}));
}

TEST(ParamRanges, InvalidRangesRejected) {
  auto r = ParamRanges::single(mid_case());
  r.duty_cycle.values = {};
  EXPECT_EQ(code_of([&] { r.validate(); }), ErrorCode::kPrecondition);
  r = ParamRanges::single(mid_case());
  r.frame_len.values = {256, 128};
  EXPECT_EQ(code_of([&] { r.validate(); }), ErrorCode::kPrecondition);
  r = ParamRanges::single(mid_case());
  r.frame_error_rate.values = {0.0, 1.0};
  EXPECT_EQ(code_of([&] { r.validate(); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { Axis::low_mid_high(3, 2, 1); }), ErrorCode::kPrecondition);
  EXPECT_EQ(Axis::low_mid_high(1, 1, 2).values, (std::vector<double>{1, 2}));
}

TEST(DesignSearch, SinglePointMidCase) {
  const auto r = design_search(ParamRanges::single(mid_case()), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog());
  EXPECT_EQ(r.evaluated, 1u);
  ASSERT_EQ(r.feasible.size(), 1u);
  EXPECT_NEAR(r.feasible[0].required_bitrate / 1e3, 10.77, 0.01);
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(r.pareto.size(), 1u);
}

TEST(DesignSearch, Table3ContainsMidDesign) {
  const auto r = design_search(ParamRanges::table3(), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog());
  EXPECT_EQ(r.evaluated, 2187u);
  EXPECT_EQ(r.feasible.size() + r.rejected.size(), 2187u);
  ASSERT_FALSE(r.feasible.empty());
  const auto it = std::find_if(r.feasible.begin(), r.feasible.end(),
                               [](const DesignOutcome& o) { return o.params == DesignParams{}; });
  ASSERT_NE(it, r.feasible.end());
  EXPECT_NEAR(it->required_bitrate, 1024.0 / 360.0 * 3788.0, 1e-9);
  for (std::size_t i = 1; i < r.feasible.size(); ++i) {
    EXPECT_LE(r.feasible[i - 1].required_bitrate, r.feasible[i].required_bitrate);
  }
  for (const auto& o : r.rejected) {
    EXPECT_FALSE(o.feasible());
    const bool has_reason = std::any_of(o.criteria.begin(), o.criteria.end(), [](const auto& c) {
      return !c.passed && !c.reason.empty();
    });
    EXPECT_TRUE(has_reason);
  }
}

TEST(DesignSearch, ParetoMatchesBruteForceDominance) {
  const auto r = design_search(ParamRanges::table3(), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog());
  // Independent O(n^2) oracle: keep outcomes no other feasible outcome dominates.
  std::multiset<std::pair<double, double>> expected;
  for (const auto& a : r.feasible) {
    bool dominated = false;
    for (const auto& b : r.feasible) {
      const bool no_worse = b.required_bitrate <= a.required_bitrate &&
                            b.params.tolerable_delay <= a.params.tolerable_delay;
      const bool better = b.required_bitrate < a.required_bitrate ||
                          b.params.tolerable_delay < a.params.tolerable_delay;
      if (no_worse && better) {
        dominated = true;
        break;
      }
    }
    if (!dominated) expected.insert({a.required_bitrate, a.params.tolerable_delay});
  }
  std::multiset<std::pair<double, double>> actual;
  for (const auto& o : r.pareto) actual.insert({o.required_bitrate, o.params.tolerable_delay});
  EXPECT_EQ(actual, expected);
}

TEST(DesignSearch, MinDelayObjectiveOrdersByDelay) {
  const auto r = design_search(ParamRanges::table3(), Objective::kMinDelay, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog());
  for (std::size_t i = 1; i < r.feasible.size(); ++i) {
    EXPECT_LE(r.feasible[i - 1].params.tolerable_delay, r.feasible[i].params.tolerable_delay);
  }
}

TEST(DesignSearch, InfeasibleEverywhereKeepsReasons) {
  const auto r = design_search(ParamRanges::table3(), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, {});
  EXPECT_TRUE(r.feasible.empty());
  EXPECT_TRUE(r.pareto.empty());
  EXPECT_EQ(r.rejected.size(), 2187u);
}

TEST(DesignSearch, ThreadCountDoesNotChangeResult) {
  const auto a = design_search(ParamRanges::table3(), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog(), 1);
  const auto b = design_search(ParamRanges::table3(), Objective::kMinBitrate, 400.0,
                               500.0 / kSecondsPerYear, builtin_catalog(), 4);
  ASSERT_EQ(a.feasible.size(), b.feasible.size());
  for (std::size_t i = 0; i < a.feasible.size(); ++i) {
    EXPECT_EQ(a.feasible[i].params, b.feasible[i].params);
    EXPECT_EQ(a.feasible[i].required_bitrate, b.feasible[i].required_bitrate);
  }
}

TEST(DesignSearch, InvalidRangesRejected) {
  auto r = ParamRanges::single(mid_case());
  r.frame_efficiency.values = {1.5};
  EXPECT_EQ(code_of([&] {
              design_search(r, Objective::kMinBitrate, 400.0, 1e-5, builtin_catalog());
            }),
            ErrorCode::kPrecondition);
}

}  // namespace
}  // namespace seisnet::crosslayer
