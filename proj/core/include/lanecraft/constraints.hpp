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

#ifndef LANECRAFT_CONSTRAINTS_HPP_
#define LANECRAFT_CONSTRAINTS_HPP_

#include <string_view>
#include <vector>

#include "lanecraft/trajectory.hpp"

namespace lanecraft {

// Acceleration envelope in m/s^2. Validated by check(): a_min < 0 < a_max.
struct ConstraintLimits {
  double a_max = 2.0;
  double a_min = -3.0;
  bool require_forward = true;
};

enum class ViolationKind {
  kCombinedAccel,  // f_a(t) >= a_max
  kAccelMax,       // x''(t) > a_max
  kAccelMin,       // x''(t) < a_min
  kForward,        // x'(t) <= 0
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  double t;
  ViolationKind kind;
  double value;
};

struct Peak {
  double value = 0.0;
  double t = 0.0;
};

struct ConstraintReport {
  bool feasible = true;
  Peak combined_accel;
  Peak longitudinal_accel;  // max x''
  Peak longitudinal_decel;  // min x''
  Peak lateral_accel;       // max |y''|
  Peak jerk_longitudinal;   // max |x'''|
  Peak jerk_lateral;        // max |y'''|
  std::vector<Violation> violations;
};

// sqrt(x''(t)^2 + y''(t)^2).
double combined_accel(const TrajectoryPlan& plan, double t);

inline constexpr double kDefaultCheckStep = 0.01;

// Evaluates the envelope on t = 0, dt, ..., T. Requires 0 < dt <= T/10
// and valid limits (std::invalid_argument otherwise). A violation is a
// report outcome, not an error.
ConstraintReport check(const TrajectoryPlan& plan, const ConstraintLimits& limits,
                       double dt = kDefaultCheckStep);

}  // namespace lanecraft

#endif  // LANECRAFT_CONSTRAINTS_HPP_
