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

#ifndef LANECRAFT_SCENARIO_HPP_
#define LANECRAFT_SCENARIO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lanecraft/constraints.hpp"
#include "lanecraft/trajectory.hpp"

namespace lanecraft {

inline constexpr int kOriginalLane = 0;
inline constexpr int kTargetLane = 1;

// One vehicle on a straight two-lane road. s is the longitudinal position of
// the footprint center, measured from the ego start. Constant velocity.
struct VehicleState {
  std::string id;
  int lane = kOriginalLane;
  double s = 0.0;
  double v = 0.0;
  double length = 5.0;
  double width = 2.0;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  VehicleState ego;
  std::vector<VehicleState> others;
  double lane_width = 3.6;
  double safety_distance = 3.0;
  ConstraintLimits limits;
  TrajectoryFamily family = TrajectoryFamily::kSextic6Quintic5;
  double a6 = kDefaultA6;
  std::optional<double> duration_override;
  // End speed of the maneuver; the ego speed when unset.
  std::optional<double> target_speed;
  double dt = 0.01;
  // Skip the gap gates of the behavior planner (a duration is still needed).
  bool force_maneuver = false;
};

// Throws std::invalid_argument naming the first broken invariant.
void validate(const ScenarioConfig& config);

double target_speed(const ScenarioConfig& config);

// Bumper-to-bumper gap from a to b along s (positive when b is ahead).
double bumper_gap(const VehicleState& a, const VehicleState& b);

// Nearest vehicle ahead of the ego in the ego lane, if any.
const VehicleState* current_lane_lead(const ScenarioConfig& config);
// Nearest target-lane vehicles at or ahead of / behind the ego center.
const VehicleState* target_lane_lead(const ScenarioConfig& config);
const VehicleState* target_lane_lag(const ScenarioConfig& config);

// Maneuver inputs implied by the scenario. relative_distance is the bumper
// gap to the current-lane lead (infinite without one); duration carries the
// override when present.
ManeuverParams maneuver_params(const ScenarioConfig& config);

}  // namespace lanecraft

#endif  // LANECRAFT_SCENARIO_HPP_
