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

#ifndef LANECRAFT_BEHAVIOR_HPP_
#define LANECRAFT_BEHAVIOR_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lanecraft/scenario.hpp"

namespace lanecraft {

// A target-lane vehicle relative to the ego at decision time.
struct TargetLaneVehicle {
  std::string id;
  double offset;  // center-to-center, positive ahead of the ego
  double v;
  double length;
};

// Snapshot of the six lane-change factors plus the inputs needed to project
// them over the maneuver. Missing vehicles read as an unbounded gap.
struct DecisionFactors {
  // (1) distance between target-lane lead and lag, bumper to bumper
  double gap_target_lane;
  // (2) target-lane lead/lag speeds
  std::optional<double> v_target_lead;
  std::optional<double> v_target_lag;
  // (3) ego speed
  double v_ego;
  // (4) bumper gap to the current-lane lead
  double dist_to_lead_current;
  std::optional<double> v_lead_current;
  // (5) duration, (6) distance; empty when not computable
  std::optional<double> est_maneuver_time;
  std::optional<double> est_maneuver_distance;
  bool time_overridden = false;
  std::string infeasible_reason;

  double safety_distance;
  double ego_length;
  std::vector<TargetLaneVehicle> target_lane;
};

struct GapPolicy {
  // Ego length + 2 D_s for the default 5 m ego and 3 m safety distance.
  double min_gap = 11.0;
  // Bypass the gap gates; a maneuver duration is still required.
  bool force = false;
};

GapPolicy default_policy(const ScenarioConfig& config);

enum class Action { kKeepLane, kInitiateLaneChange, kAbortInfeasible };

enum class GateReason {
  kAllGatesPassed,
  kForced,
  kManeuverInfeasible,
  kGapTooSmall,
  kTargetLaneConflict,
  kLeadTooClose,
};

std::string_view to_string(Action action);
std::string_view to_string(GateReason reason);

struct ManeuverDecision {
  Action action = Action::kKeepLane;
  GateReason reason = GateReason::kGapTooSmall;
  DecisionFactors factors;
  std::optional<TrajectoryFamily> plan_family;
};

DecisionFactors compute_factors(const ScenarioConfig& config);

// Gates, in order: duration feasible -> target-lane gap >= min_gap ->
// projected target-lane separation >= D_s -> current-lane lead gap at the
// end of the maneuver > D_s. The ego is projected at constant speed d / T.
ManeuverDecision decide(const DecisionFactors& factors, const GapPolicy& policy);

// compute_factors + decide with the scenario's policy and family.
ManeuverDecision plan_maneuver(const ScenarioConfig& config);

}  // namespace lanecraft

#endif  // LANECRAFT_BEHAVIOR_HPP_
