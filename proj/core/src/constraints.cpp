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

#include "lanecraft/constraints.hpp"

#include <cmath>
#include <stdexcept>

namespace lanecraft {
namespace {

void track_max(Peak& peak, double value, double t, bool first) {
  if (first || value > peak.value) peak = {value, t};
}

void track_min(Peak& peak, double value, double t, bool first) {
  if (first || value < peak.value) peak = {value, t};
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kCombinedAccel: return "f_a";
    case ViolationKind::kAccelMax: return "a_max";
    case ViolationKind::kAccelMin: return "a_min";
    case ViolationKind::kForward: return "forward";
  }
  return "unknown";
}

double combined_accel(const TrajectoryPlan& plan, double t) {
  return std::hypot(plan.longitudinal.derivative_at(t, 2), plan.lateral.derivative_at(t, 2));
}

ConstraintReport check(const TrajectoryPlan& plan, const ConstraintLimits& limits, double dt) {
  if (!(limits.a_min < 0.0 && 0.0 < limits.a_max)) {
    throw std::invalid_argument("constraint limits need a_min < 0 < a_max");
  }
  if (!(dt > 0.0) || !(dt <= plan.duration / 10.0)) {
    throw std::invalid_argument("check: need 0 < dt <= T/10");
  }

  const Polynomial vx = plan.longitudinal.derivative(1);
  const Polynomial ax = plan.longitudinal.derivative(2);
  const Polynomial jx = plan.longitudinal.derivative(3);
  const Polynomial ay = plan.lateral.derivative(2);
  const Polynomial jy = plan.lateral.derivative(3);

  ConstraintReport report;
  bool first = true;
  for (double t : time_grid(plan.duration, dt)) {
    const double a_long = ax(t);
    const double a_lat = ay(t);
    const double f_a = std::hypot(a_long, a_lat);
    const double v_long = vx(t);

    track_max(report.combined_accel, f_a, t, first);
    track_max(report.longitudinal_accel, a_long, t, first);
    track_min(report.longitudinal_decel, a_long, t, first);
    track_max(report.lateral_accel, std::abs(a_lat), t, first);
    track_max(report.jerk_longitudinal, std::abs(jx(t)), t, first);
    track_max(report.jerk_lateral, std::abs(jy(t)), t, first);
    first = false;

    if (f_a >= limits.a_max) {
      report.violations.push_back({t, ViolationKind::kCombinedAccel, f_a});
    }
    if (a_long > limits.a_max) report.violations.push_back({t, ViolationKind::kAccelMax, a_long});
    if (a_long < limits.a_min) report.violations.push_back({t, ViolationKind::kAccelMin, a_long});
    if (limits.require_forward && !(v_long > 0.0)) {
      report.violations.push_back({t, ViolationKind::kForward, v_long});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

}  // namespace lanecraft
