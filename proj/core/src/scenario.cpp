// Copyright 2026 The LaneCraft Authors
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

#include "lanecraft/scenario.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lanecraft {
namespace {

void validate_vehicle(const VehicleState& v, const std::string& where) {
  if (v.lane != kOriginalLane && v.lane != kTargetLane) {
    throw std::invalid_argument(where + ": lane must be 0 or 1");
  }
  if (!std::isfinite(v.s)) throw std::invalid_argument(where + ": s must be finite");
  if (!(v.v >= 0.0) || !std::isfinite(v.v)) throw std::invalid_argument(where + ": v must be >= 0");
  if (!(v.length > 0.0)) throw std::invalid_argument(where + ": length must be > 0");
  if (!(v.width > 0.0)) throw std::invalid_argument(where + ": width must be > 0");
}

}  // namespace

void validate(const ScenarioConfig& config) {
  validate_vehicle(config.ego, "ego");
  if (config.ego.lane != kOriginalLane) {
    throw std::invalid_argument("ego: must start in lane 0");
  }
  if (!(config.ego.v > 0.0)) throw std::invalid_argument("ego: v must be > 0");
  for (std::size_t i = 0; i < config.others.size(); ++i) {
    validate_vehicle(config.others[i], "others[" + std::to_string(i) + "]");
  }
  if (!(config.lane_width > 0.0)) throw std::invalid_argument("lane_width must be > 0");
  if (!(config.safety_distance >= 0.0)) {
    throw std::invalid_argument("safety_distance must be >= 0");
  }
  if (!(config.limits.a_min < 0.0 && 0.0 < config.limits.a_max)) {
    throw std::invalid_argument("limits: need a_min < 0 < a_max");
  }
  if (!std::isfinite(config.a6)) throw std::invalid_argument("a6 must be finite");
  if (config.duration_override && !(*config.duration_override > 0.0)) {
    throw std::invalid_argument("duration override must be > 0");
  }
  if (config.target_speed && !(*config.target_speed >= 0.0)) {
    throw std::invalid_argument("target_speed must be >= 0");
  }
  if (!(config.dt > 0.0)) throw std::invalid_argument("dt must be > 0");
}

double target_speed(const ScenarioConfig& config) {
  return config.target_speed.value_or(config.ego.v);
}

double bumper_gap(const VehicleState& a, const VehicleState& b) {
  return (b.s - a.s) - 0.5 * (a.length + b.length);
}

const VehicleState* current_lane_lead(const ScenarioConfig& config) {
  const VehicleState* best = nullptr;
  for (const auto& o : config.others) {
    if (o.lane != config.ego.lane || o.s <= config.ego.s) continue;
    if (best == nullptr || o.s < best->s) best = &o;
  }
  return best;
}

const VehicleState* target_lane_lead(const ScenarioConfig& config) {
  const VehicleState* best = nullptr;
  for (const auto& o : config.others) {
    if (o.lane != kTargetLane || o.s < config.ego.s) continue;
    if (best == nullptr || o.s < best->s) best = &o;
  }
  return best;
}

const VehicleState* target_lane_lag(const ScenarioConfig& config) {
  const VehicleState* best = nullptr;
  for (const auto& o : config.others) {
    if (o.lane != kTargetLane || o.s >= config.ego.s) continue;
    if (best == nullptr || o.s > best->s) best = &o;
  }
  return best;
}

ManeuverParams maneuver_params(const ScenarioConfig& config) {
  ManeuverParams p;
  p.v_initial = config.ego.v;
  p.v_target = target_speed(config);
  p.safety_distance = config.safety_distance;
  p.lane_width = config.lane_width;
  p.a6 = config.a6;
  p.duration = config.duration_override;
  if (const VehicleState* lead = current_lane_lead(config)) {
    p.v_lead = lead->v;
    p.relative_distance = bumper_gap(config.ego, *lead);
  } else {
    p.v_lead = config.ego.v;
    p.relative_distance = std::numeric_limits<double>::infinity();
  }
  return p;
}

}  // namespace lanecraft
