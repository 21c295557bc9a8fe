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

#include "lanecraft/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lanecraft {

Rect footprint(const VehicleState& v, double x, double y) {
  return {x, y, 0.5 * v.length, 0.5 * v.width};
}

double separation(const Rect& a, const Rect& b) {
  const double dx = std::abs(a.cx - b.cx) - (a.half_length + b.half_length);
  const double dy = std::abs(a.cy - b.cy) - (a.half_width + b.half_width);
  if (dx > 0.0 && dy > 0.0) return std::hypot(dx, dy);
  if (dx > 0.0) return dx;
  if (dy > 0.0) return dy;
  return std::max(dx, dy);
}

SimResult run(const ScenarioConfig& config) {
  validate(config);

  SimResult result;
  result.decision = plan_maneuver(config);
  result.min_separation.value = std::numeric_limits<double>::infinity();
  for (const auto& o : config.others) result.vehicle_ids.push_back(o.id);

  if (result.decision.action == Action::kAbortInfeasible) {
    throw InfeasibleManeuver("behavior planner aborted: " +
                             result.decision.factors.infeasible_reason);
  }
  if (result.decision.action == Action::kKeepLane) return result;

  ManeuverParams params = maneuver_params(config);
  params.duration = result.decision.factors.est_maneuver_time;
  params.distance = result.decision.factors.est_maneuver_distance;
  const TrajectoryPlan& plan = result.plan.emplace(build_plan(params, config.family));
  result.constraint_report =
      check(plan, config.limits, std::min(config.dt, plan.duration / 10.0));

  const double dt = std::min(config.dt, plan.duration);
  for (double t : time_grid(plan.duration, dt)) {
    SimSample step;
    step.ego = sample_at(plan, t);
    const Rect zone =
        footprint(config.ego, config.ego.s + step.ego.x, step.ego.y)
            .inflated(config.safety_distance);
    for (const auto& o : config.others) {
      const Rect other = footprint(o, o.s + o.v * t, o.lane * config.lane_width);
      const double gap = separation(zone, other);
      step.separations.push_back(gap);
      if (gap < result.min_separation.value) result.min_separation = {gap, t, o.id};
    }
    result.samples.push_back(std::move(step));
  }
  result.collision = result.min_separation.value < 0.0;
  return result;
}

}  // namespace lanecraft
