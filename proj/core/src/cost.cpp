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

#include <seisnet/cost.hpp>

#include <seisnet/error.hpp>

namespace seisnet::cost {

using detail::fail;
using detail::require;

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kPrecondition, "cost overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kPrecondition, "cost overflow");
  return r;
}

}  // namespace

void CostModel::validate() const {
  require(node_count >= 0 && gateway_count >= 0 && extra_mast_count >= 0,
          ErrorCode::kPrecondition, "cost counts must be non-negative");
  require(node_unit_price.cents >= 0 && gateway_unit_price.cents >= 0 &&
              mast_unit_price.cents >= 0 && subscription_per_node_year.cents >= 0,
          ErrorCode::kPrecondition, "cost prices must be non-negative");
  require(years >= 1, ErrorCode::kPrecondition, "cost years must be >= 1");
}

Money total_opex(const CostModel& m) {
  m.validate();
  std::int64_t total = mul(m.node_count, m.node_unit_price.cents);
  total = add(total, mul(m.gateway_count, m.gateway_unit_price.cents));
  total = add(total, mul(m.extra_mast_count, m.mast_unit_price.cents));
  total = add(total, mul(mul(m.years, m.node_count), m.subscription_per_node_year.cents));
  return Money{total};
}

CostModel lora_reference() {
  CostModel m;
  m.node_count = 1600;
  m.node_unit_price = Money::dollars(10);
  m.gateway_count = 45;
  m.gateway_unit_price = Money::dollars(1000);
  return m;
}

CostModel nbiot_reference() {
  CostModel m;
  m.node_count = 1600;
  m.node_unit_price = Money::dollars(5);
  m.extra_mast_count = 5;
  m.mast_unit_price = Money::dollars(20000);
  m.subscription_per_node_year = Money::dollars(30);
  return m;
}

std::string format_money(Money m) {
  const bool negative = m.cents < 0;
  const std::uint64_t abs_cents = negative ? 0 - static_cast<std::uint64_t>(m.cents)
                                           : static_cast<std::uint64_t>(m.cents);
  std::string whole = std::to_string(abs_cents / 100);
  for (int i = static_cast<int>(whole.size()) - 3; i > 0; i -= 3) whole.insert(i, ",");
  const auto frac = abs_cents % 100;
  std::string out = (negative ? "-$" : "$") + whole;
  if (frac != 0) out += "." + std::string(frac < 10 ? "0" : "") + std::to_string(frac);
  return out;
}

}  // namespace seisnet::cost
