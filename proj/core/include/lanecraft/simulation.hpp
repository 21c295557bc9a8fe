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

#ifndef LANECRAFT_SIMULATION_HPP_
#define LANECRAFT_SIMULATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lanecraft/behavior.hpp"
#include "lanecraft/constraints.hpp"
#include "lanecraft/scenario.hpp"
#include "lanecraft/trajectory.hpp"

namespace lanecraft {

// Axis-aligned rectangle given by its center and half extents.
struct Rect {
  double cx = 0.0;
  double cy = 0.0;
  double half_length = 0.0;
  double half_width = 0.0;

  Rect inflated(double margin) const {
    return {cx, cy, half_length + margin, half_width + margin};
  }
};

Rect footprint(const VehicleState& v, double x, double y);

// Euclidean gap between two rectangles; when they overlap, the negated
// penetration depth along the axis of least overlap.
double separation(const Rect& a, const Rect& b);

struct SimSample {
  TrajectorySample ego;             // ego pose relative to its start
  std::vector<double> separations;  // one per entry of ScenarioConfig::others
};

struct MinSeparation {
  double value;
  double t = 0.0;
  std::string vehicle_id;
};

struct SimResult {
  ManeuverDecision decision;
  std::optional<TrajectoryPlan> plan;
  std::optional<ConstraintReport> constraint_report;
  std::vector<std::string> vehicle_ids;
  std::vector<SimSample> samples;
  MinSeparation min_separation;
  bool collision = false;
};

// Consults the behavior planner and, on InitiateLaneChange, plays the plan
// back at config.dt against constant-velocity traffic. The safety zone is
// the ego footprint inflated by D_s on every side. KeepLane yields a result
// with no samples. Throws InfeasibleManeuver when the planner aborts.
SimResult run(const ScenarioConfig& config);

}  // namespace lanecraft

#endif  // LANECRAFT_SIMULATION_HPP_
