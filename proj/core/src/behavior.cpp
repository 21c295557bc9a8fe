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

#include "lanecraft/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lanecraft {
namespace {

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Smallest |offset(t)| over [0, T] for offset(t) = offset0 + rate t.
double min_abs_linear(double offset0, double rate, double horizon) {
  const double offset1 = offset0 + rate * horizon;
  if ((offset0 <= 0.0 && offset1 >= 0.0) || (offset0 >= 0.0 && offset1 <= 0.0)) return 0.0;
  return std::min(std::abs(offset0), std::abs(offset1));
}

bool target_lane_clear(const DecisionFactors& f, double horizon, double ego_speed) {
  for (const auto& o : f.target_lane) {
    const double closest = min_abs_linear(o.offset, o.v - ego_speed, horizon);
    if (closest - 0.5 * (o.length + f.ego_length) < f.safety_distance) return false;
  }
  return true;
}

}  // namespace

GapPolicy default_policy(const ScenarioConfig& config) {
  GapPolicy policy;
  policy.min_gap = config.ego.length + 2.0 * config.safety_distance;
  policy.force = config.force_maneuver;
  return policy;
}

std::string_view to_string(Action action) {
  switch (action) {
    case Action::kKeepLane: return "KeepLane";
    case Action::kInitiateLaneChange: return "InitiateLaneChange";
    case Action::kAbortInfeasible: return "AbortInfeasible";
  }
  return "unknown";
}

std::string_view to_string(GateReason reason) {
  switch (reason) {
    case GateReason::kAllGatesPassed: return "AllGatesPassed";
    case GateReason::kForced: return "Forced";
    case GateReason::kManeuverInfeasible: return "ManeuverInfeasible";
    case GateReason::kGapTooSmall: return "GapTooSmall";
    case GateReason::kTargetLaneConflict: return "TargetLaneConflict";
    case GateReason::kLeadTooClose: return "LeadTooClose";
  }
  return "unknown";
}

DecisionFactors compute_factors(const ScenarioConfig& config) {
  DecisionFactors f;
  f.v_ego = config.ego.v;
  f.safety_distance = config.safety_distance;
  f.ego_length = config.ego.length;

  const VehicleState* lead = target_lane_lead(config);
  const VehicleState* lag = target_lane_lag(config);
  f.gap_target_lane = (lead && lag) ? bumper_gap(*lag, *lead) : kUnbounded;
  if (lead) f.v_target_lead = lead->v;
  if (lag) f.v_target_lag = lag->v;

  if (const VehicleState* cur = current_lane_lead(config)) {
    f.dist_to_lead_current = bumper_gap(config.ego, *cur);
    f.v_lead_current = cur->v;
  } else {
    f.dist_to_lead_current = kUnbounded;
  }

  for (const auto& o : config.others) {
    if (o.lane != kTargetLane) continue;
    f.target_lane.push_back({o.id, o.s - config.ego.s, o.v, o.length});
  }

  ManeuverParams params = maneuver_params(config);
  f.time_overridden = config.duration_override.has_value();
  try {
    params = resolve_timing(params);
    f.est_maneuver_time = params.duration;
    f.est_maneuver_distance = params.distance;
  } catch (const InfeasibleManeuver& e) {
    f.infeasible_reason = e.what();
  }
  return f;
}

ManeuverDecision decide(const DecisionFactors& factors, const GapPolicy& policy) {
  ManeuverDecision d;
  d.factors = factors;

  if (!factors.est_maneuver_time || !factors.est_maneuver_distance) {
    d.action = Action::kAbortInfeasible;
    d.reason = GateReason::kManeuverInfeasible;
    return d;
  }
  if (policy.force) {
    d.action = Action::kInitiateLaneChange;
    d.reason = GateReason::kForced;
    return d;
  }

  const double T = *factors.est_maneuver_time;
  const double ego_speed = *factors.est_maneuver_distance / T;

  d.action = Action::kKeepLane;
  if (!(factors.gap_target_lane >= policy.min_gap)) {
    d.reason = GateReason::kGapTooSmall;
    return d;
  }
  if (!target_lane_clear(factors, T, ego_speed)) {
    d.reason = GateReason::kTargetLaneConflict;
    return d;
  }
  if (factors.v_lead_current) {
    const double end_gap = factors.dist_to_lead_current + (*factors.v_lead_current - ego_speed) * T;
    if (!(end_gap > factors.safety_distance)) {
      d.reason = GateReason::kLeadTooClose;
      return d;
    }
  }
  d.action = Action::kInitiateLaneChange;
  d.reason = GateReason::kAllGatesPassed;
  return d;
}

ManeuverDecision plan_maneuver(const ScenarioConfig& config) {
  ManeuverDecision d = decide(compute_factors(config), default_policy(config));
  if (d.action == Action::kInitiateLaneChange) d.plan_family = config.family;
  return d;
}

}  // namespace lanecraft
