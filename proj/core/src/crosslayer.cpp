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

#include <seisnet/crosslayer.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>

#include <seisnet/error.hpp>
#include <seisnet/parallel.hpp>

namespace seisnet::crosslayer {

using detail::fail;
using detail::require;

namespace {

std::string fmt_rate(double bps) {
  std::ostringstream os;
  os.precision(6);
  os << bps << " bps";
  return os.str();
}

bool is_finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_axis(const Axis& axis, const char* name) {
  if (axis.values.empty()) {
    fail(ErrorCode::kPrecondition, std::string("range '") + name + "' is empty");
  }
  if (!std::is_sorted(axis.values.begin(), axis.values.end())) {
    fail(ErrorCode::kPrecondition,
         std::string("range '") + name + "' must be ascending");
  }
}

}  // namespace

void DesignParams::validate() const {
  require(frame_efficiency > 0.0 && frame_efficiency <= 1.0,
          ErrorCode::kPrecondition, "frame_efficiency must lie in (0, 1]");
  require(is_finite_positive(frame_len), ErrorCode::kPrecondition,
          "frame_len must be positive");
  require(std::isfinite(trigger_payload) && trigger_payload >= 1.0,
          ErrorCode::kPrecondition, "trigger_payload must be at least 1 byte");
  require(is_finite_positive(tolerable_delay), ErrorCode::kPrecondition,
          "tolerable_delay must be positive");
  require(duty_cycle > 0.0 && duty_cycle <= 1.0, ErrorCode::kPrecondition,
          "duty_cycle must lie in (0, 1]");
  require(is_finite_positive(split_ratio), ErrorCode::kPrecondition,
          "split_ratio must be positive");
  require(frame_error_rate >= 0.0 && frame_error_rate < 1.0,
          ErrorCode::kPrecondition, "frame_error_rate must lie in [0, 1)");
}

Axis Axis::low_mid_high(double low, double mid, double high) {
  require(low <= mid && mid <= high, ErrorCode::kPrecondition,
          "axis requires low <= mid <= high");
  Axis a{{low, mid, high}};
  a.values.erase(std::unique(a.values.begin(), a.values.end()), a.values.end());
  return a;
}

void ParamRanges::validate() const {
  check_axis(frame_efficiency, "frame_efficiency");
  check_axis(frame_len, "frame_len");
  check_axis(trigger_payload, "trigger_payload");
  check_axis(tolerable_delay, "tolerable_delay");
  check_axis(duty_cycle, "duty_cycle");
  check_axis(split_ratio, "split_ratio");
  check_axis(frame_error_rate, "frame_error_rate");
  // Ascending axes: checking both ends covers every value.
  DesignParams lo{frame_efficiency.values.front(), frame_len.values.front(),
                  trigger_payload.values.front(), tolerable_delay.values.front(),
                  duty_cycle.values.front(), split_ratio.values.front(),
                  frame_error_rate.values.front()};
  DesignParams hi{frame_efficiency.values.back(), frame_len.values.back(),
                  trigger_payload.values.back(), tolerable_delay.values.back(),
                  duty_cycle.values.back(), split_ratio.values.back(),
                  frame_error_rate.values.back()};
  lo.validate();
  hi.validate();
}

std::size_t ParamRanges::grid_size() const {
  return frame_efficiency.values.size() * frame_len.values.size() *
         trigger_payload.values.size() * tolerable_delay.values.size() *
         duty_cycle.values.size() * split_ratio.values.size() *
         frame_error_rate.values.size();
}

ParamRanges ParamRanges::table3() {
  return ParamRanges{
      Axis::low_mid_high(0.9, 0.95, 0.98),
      Axis::low_mid_high(64, 128, 256),
      Axis::low_mid_high(108e3, 162e3, 216e3),
      Axis::low_mid_high(kSecondsPerHour, 10 * kSecondsPerHour, kSecondsPerDay),
      Axis::low_mid_high(0.01, 0.05, 0.1),
      Axis::low_mid_high(1, 3, 5),
      Axis::low_mid_high(0.01, 0.05, 0.1),
  };
}

ParamRanges ParamRanges::single(const DesignParams& p) {
  return ParamRanges{Axis::single(p.frame_efficiency), Axis::single(p.frame_len),
                     Axis::single(p.trigger_payload), Axis::single(p.tolerable_delay),
                     Axis::single(p.duty_cycle),       Axis::single(p.split_ratio),
                     Axis::single(p.frame_error_rate)};
}

void TechnologyEntry::validate() const {
  require(is_finite_positive(max_bitrate), ErrorCode::kPrecondition,
          "technology max_bitrate must be positive");
  require(max_duty_cycle > 0.0 && max_duty_cycle <= 1.0,
          ErrorCode::kPrecondition, "technology max_duty_cycle must lie in (0, 1]");
}

std::vector<TechnologyEntry> builtin_catalog() {
  return {
      {"LoRa", 50e3, 0.121, Band::kUnlicensed, false},
      {"LoRa-SF7", 5470.0, 0.121, Band::kUnlicensed, false},
      {"NB-IoT", 200e3, 1.0, Band::kLicensed, true},
  };
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::kDeliveredBeforeNextTrigger: return "delivered-before-next-trigger";
    case Criterion::kBufferSustainable: return "buffer-sustainable";
    case Criterion::kTechnologyMatch: return "technology-match";
  }
  return "unknown";
}

bool DesignOutcome::feasible() const noexcept {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

std::int64_t frames_per_trigger(const DesignParams& p, bool with_loss) {
  p.validate();
  double frames = p.trigger_payload * (p.split_ratio + 1.0);
  if (with_loss) frames *= 1.0 + p.frame_error_rate;
  frames /= p.frame_efficiency * p.frame_len;
  return std::max<std::int64_t>(1, snapped_ceil(frames));
}

Seconds total_trigger_delay(const DesignParams& p, BitsPerSecond bitrate) {
  if (!(bitrate > 0.0)) fail(ErrorCode::kInvalidRate, "bitrate must be positive");
  const auto frames = static_cast<double>(frames_per_trigger(p, true));
  return frames * kBitsPerByte * p.frame_len / (bitrate * p.duty_cycle);
}

BitsPerSecond required_bitrate(const DesignParams& p) {
  const auto frames = static_cast<double>(frames_per_trigger(p, true));
  return kBitsPerByte * p.frame_len / (p.duty_cycle * p.tolerable_delay) * frames;
}

DesignOutcome check_feasibility(const DesignParams& p, BitsPerSecond bitrate,
                                BitsPerSecond continuous_rate,
                                double triggers_per_second,
                                const std::vector<TechnologyEntry>& catalog) {
  p.validate();
  if (!is_finite_positive(bitrate)) fail(ErrorCode::kInvalidRate, "bitrate must be positive");
  require(is_finite_positive(triggers_per_second), ErrorCode::kPrecondition,
          "trigger rate must be positive");
  require(std::isfinite(continuous_rate) && continuous_rate >= 0.0,
          ErrorCode::kPrecondition, "continuous rate must be non-negative");

  DesignOutcome out;
  out.params = p;
  out.required_bitrate = bitrate;
  out.frames_needed = frames_per_trigger(p, true);
  out.total_delay = total_trigger_delay(p, bitrate);

  {
    auto& c = out.criteria[0];
    c.criterion = Criterion::kDeliveredBeforeNextTrigger;
    const double gap = 1.0 / triggers_per_second;
    c.passed = out.total_delay <= gap;
    std::ostringstream os;
    os << "burst delay " << out.total_delay << " s "
       << (c.passed ? "<=" : ">") << " mean trigger gap " << gap << " s";
    c.reason = os.str();
  }
  {
    auto& c = out.criteria[1];
    c.criterion = Criterion::kBufferSustainable;
    const double link_payload = bitrate * p.frame_efficiency;
    c.passed = link_payload >= continuous_rate;
    c.reason = "link payload rate " + fmt_rate(link_payload) +
               (c.passed ? " >= " : " < ") + "continuous rate " +
               fmt_rate(continuous_rate);
    const double duty_payload = p.duty_cycle * link_payload;
    if (duty_payload < continuous_rate) {
      c.warnings.push_back("duty-cycled payload throughput " + fmt_rate(duty_payload) +
                           " is below the continuous rate; buffer grows by " +
                           fmt_rate(continuous_rate - duty_payload));
    }
    const double d1_share = duty_payload * p.split_ratio / (1.0 + p.split_ratio);
    if (d1_share < continuous_rate) {
      c.warnings.push_back("while a burst drains the d1 share " + fmt_rate(d1_share) +
                           " is below the continuous rate");
    }
  }
  {
    auto& c = out.criteria[2];
    c.criterion = Criterion::kTechnologyMatch;
    for (const auto& tech : catalog) {
      if (tech.max_bitrate >= bitrate && tech.max_duty_cycle >= p.duty_cycle) {
        out.matched.push_back(tech);
      }
    }
    c.passed = !out.matched.empty();
    if (catalog.empty()) {
      c.reason = "technology catalog is empty";
    } else if (c.passed) {
      c.reason = "matched";
      for (const auto& t : out.matched) c.reason += " " + t.name;
    } else {
      c.reason = "no technology supports " + fmt_rate(bitrate) + " at duty cycle " +
                 std::to_string(p.duty_cycle);
    }
  }
  return out;
}

namespace {

auto tie_key(const DesignParams& p) {
  return std::make_tuple(p.duty_cycle, p.split_ratio, p.frame_efficiency,
                         p.frame_len, p.trigger_payload, p.tolerable_delay,
                         p.frame_error_rate);
}

DesignParams grid_point(const ParamRanges& r, std::size_t index) {
  // Mixed-radix decode, last axis fastest.
  auto take = [&index](const Axis& a) {
    const std::size_t n = a.values.size();
    const double v = a.values[index % n];
    index /= n;
    return v;
  };
  DesignParams p;
  p.frame_error_rate = take(r.frame_error_rate);
  p.split_ratio = take(r.split_ratio);
  p.duty_cycle = take(r.duty_cycle);
  p.tolerable_delay = take(r.tolerable_delay);
  p.trigger_payload = take(r.trigger_payload);
  p.frame_len = take(r.frame_len);
  p.frame_efficiency = take(r.frame_efficiency);
  return p;
}

}  // namespace

SearchResult design_search(const ParamRanges& ranges, Objective objective,
                           BitsPerSecond continuous_rate,
                           double triggers_per_second,
                           const std::vector<TechnologyEntry>& catalog,
                           unsigned threads) {
  ranges.validate();
  for (const auto& t : catalog) t.validate();

  const std::size_t n = ranges.grid_size();
  std::vector<DesignOutcome> outcomes(n);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    const DesignParams p = grid_point(ranges, i);
    outcomes[i] = check_feasibility(p, required_bitrate(p), continuous_rate,
                                    triggers_per_second, catalog);
  });

  SearchResult result;
  result.evaluated = n;
  for (auto& o : outcomes) {
    (o.feasible() ? result.feasible : result.rejected).push_back(std::move(o));
  }

  auto less = [objective](const DesignOutcome& a, const DesignOutcome& b) {
    if (objective == Objective::kMinBitrate) {
      if (a.required_bitrate != b.required_bitrate) return a.required_bitrate < b.required_bitrate;
      if (a.params.tolerable_delay != b.params.tolerable_delay)
        return a.params.tolerable_delay < b.params.tolerable_delay;
    } else {
      if (a.params.tolerable_delay != b.params.tolerable_delay)
        return a.params.tolerable_delay < b.params.tolerable_delay;
      if (a.required_bitrate != b.required_bitrate) return a.required_bitrate < b.required_bitrate;
    }
    return tie_key(a.params) < tie_key(b.params);
  };
  std::stable_sort(result.feasible.begin(), result.feasible.end(), less);

  // Pareto front: scan in (R_b, t_D2) order and keep strictly improving delays.
  std::vector<const DesignOutcome*> order;
  order.reserve(result.feasible.size());
  for (const auto& o : result.feasible) order.push_back(&o);
  std::stable_sort(order.begin(), order.end(), [](const DesignOutcome* a, const DesignOutcome* b) {
    if (a->required_bitrate != b->required_bitrate) return a->required_bitrate < b->required_bitrate;
    if (a->params.tolerable_delay != b->params.tolerable_delay)
      return a->params.tolerable_delay < b->params.tolerable_delay;
    return tie_key(a->params) < tie_key(b->params);
  });
  double best_delay = std::numeric_limits<double>::infinity();
  double last_rate = -1.0;
  double last_delay = -1.0;
  for (const auto* o : order) {
    const double d = o->params.tolerable_delay;
    const bool same_point = o->required_bitrate == last_rate && d == last_delay;
    if (d < best_delay || same_point) {
      result.pareto.push_back(*o);
      best_delay = std::min(best_delay, d);
      last_rate = o->required_bitrate;
      last_delay = d;
    }
  }
  return result;
}

}  // namespace seisnet::crosslayer
