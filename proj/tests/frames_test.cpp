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

#include <cmath>

#include <gtest/gtest.h>

#include <seisnet/error.hpp>
#include <seisnet/frames.hpp>

#include "test_util.hpp"

namespace seisnet::frames {
namespace {

using seisnet::testing::code_of;

TEST(FrameEfficiency, MidCaseSplitRecomputed) {
  const FrameSpec spec(13, 58, 57);
  EXPECT_DOUBLE_EQ(frame_efficiency(spec), 115.0 / 128.0);
  EXPECT_NEAR(frame_efficiency(spec), 0.8984, 5e-5);
}

TEST(FrameEfficiency, HeaderlessFrameIsOne) {
  EXPECT_DOUBLE_EQ(frame_efficiency(FrameSpec(0, 50, 50)), 1.0);
}

TEST(FrameEfficiency, EmptyPayloadOrFrameRejected) {
  EXPECT_EQ(code_of([] { frame_efficiency(FrameSpec(128, 0, 0)); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(code_of([] { frame_efficiency(FrameSpec(0, 0, 0)); }), ErrorCode::kInvalidFrame);
}

TEST(FrameSpec, NegativeLengthRejected) {
  EXPECT_EQ(code_of([] { FrameSpec(-1, 2, 3); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(code_of([] { FrameSpec(1, -2, 3); }), ErrorCode::kInvalidFrame);
}

TEST(FrameSpec, Accessors) {
  const FrameSpec spec(13, 58, 57);
  EXPECT_EQ(spec.total_len(), 128);
  EXPECT_EQ(spec.payload_len(), 115);
  EXPECT_DOUBLE_EQ(spec.achieved_split_ratio(), 58.0 / 57.0);
  EXPECT_TRUE(std::isinf(FrameSpec(1, 5, 0).achieved_split_ratio()));
}

TEST(SplitPayload, MidCase) {
  const auto s = split_payload(128, 0.9, 1.0);
  EXPECT_EQ(s.payload_len(), 115);
  EXPECT_EQ(s.d1_len(), 58);
  EXPECT_EQ(s.d2_len(), 57);
  EXPECT_EQ(s.header_len(), 13);
}

TEST(SplitPayload, SymmetricExact) {
  EXPECT_EQ(split_payload(100, 1.0, 1.0), FrameSpec(0, 50, 50));
}

TEST(SplitPayload, DegenerateRatioIsUnsatisfiable) {
  EXPECT_EQ(code_of([] { split_payload(64, 0.9, 100.0); }), ErrorCode::kUnsatisfiableSplit);
}

TEST(SplitPayload, PreconditionsChecked) {
  EXPECT_EQ(code_of([] { split_payload(1, 0.9, 1.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { split_payload(128, 0.0, 1.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { split_payload(128, 1.1, 1.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { split_payload(128, 0.9, 0.0); }), ErrorCode::kPrecondition);
}

TEST(FrameAirtime, Examples) {
  EXPECT_NEAR(frame_airtime(128, 10770.0), 1024.0 / 10770.0, 1e-15);
  EXPECT_NEAR(frame_airtime(128, 10770.0), 0.09508, 5e-6);
  EXPECT_DOUBLE_EQ(frame_airtime(0, 10770.0), 0.0);
  EXPECT_DOUBLE_EQ(frame_airtime(128, 1024.0), 1.0);
}

TEST(FrameAirtime, NonPositiveRateRejected) {
  EXPECT_EQ(code_of([] { frame_airtime(128, 0.0); }), ErrorCode::kInvalidRate);
  EXPECT_EQ(code_of([] { frame_airtime(128, -5.0); }), ErrorCode::kInvalidRate);
}

TEST(DutyCycle, FromFrameTime) {
  const auto d = DutyCycle::from_frame_time(1024.0 / 10770.0, 0.01);
  EXPECT_NEAR(d.t_off(), 99.0 * 1024.0 / 10770.0, 1e-12);
  EXPECT_NEAR(d.period(), 100.0 * 1024.0 / 10770.0, 1e-12);
  EXPECT_NEAR(d.ratio(), 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(DutyCycle::from_frame_time(2.0, 1.0).t_off(), 0.0);
}

TEST(DutyCycle, InvalidInputs) {
  EXPECT_EQ(code_of([] { DutyCycle(0.0, 1.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { DutyCycle(1.0, -1.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { DutyCycle::from_frame_time(1.0, 0.0); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([] { DutyCycle::from_frame_time(1.0, 1.5); }), ErrorCode::kPrecondition);
}

}  // namespace
}  // namespace seisnet::frames
