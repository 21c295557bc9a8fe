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

#ifndef LANECRAFT_TRAJECTORY_HPP_
#define LANECRAFT_TRAJECTORY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lanecraft/linear_system.hpp"
#include "lanecraft/polynomial.hpp"

namespace lanecraft {

// The closing-speed geometry admits no positive finite maneuver duration.
class InfeasibleManeuver : public std::runtime_error {
 public:
  explicit InfeasibleManeuver(const std::string& what) : std::runtime_error(what) {}
};

enum class Endpoint { kStart, kEnd };

// Imposes p^(order)(t) = value at t = 0 (kStart) or t = T (kEnd).
struct BoundaryCondition {
  std::size_t order;
  Endpoint at;
  double value;
};

// Coefficient fixed ahead of the solve instead of being determined by a
// boundary condition.
struct PinnedCoefficient {
  std::size_t index;
  double value;
};

// Boundary conditions for one polynomial over [0, T]. The polynomial has
// conditions().size() + pinned().size() coefficients.
//
// Construction validates: T > 0 (SingularSystem otherwise, both endpoints
// collapse onto the same rows), derivative orders 0..3, no duplicate
// (order, endpoint) pairs, distinct in-range pinned indices, and at most
// kMaxSystemDimension coefficients (std::invalid_argument).
class BoundaryConditionSet {
 public:
  BoundaryConditionSet(double horizon, std::vector<BoundaryCondition> conditions,
                       std::vector<PinnedCoefficient> pinned = {});

  double horizon() const { return horizon_; }
  std::size_t coefficient_count() const { return conditions_.size() + pinned_.size(); }
  const std::vector<BoundaryCondition>& conditions() const { return conditions_; }
  const std::vector<PinnedCoefficient>& pinned() const { return pinned_; }

  // System over the free coefficients in ascending index order, with pinned
  // contributions moved to the right-hand side.
  LinearSystem to_system() const;

  // Solves the boundary system. Conditions at t = 0 pin one coefficient
  // each and are applied first; the remaining block is column-equilibrated
  // and eliminated with partial pivoting.
  Polynomial solve() const;

  // max over conditions of |p^(k)(t) - value| / max(1, |value|).
  double max_relative_residual(const Polynomial& p) const;

 private:
  double horizon_;
  std::vector<BoundaryCondition> conditions_;
  std::vector<PinnedCoefficient> pinned_;
};

// Boundary sets behind each generator. Exposed so callers can audit the
// residual of every imposed condition.
BoundaryConditionSet lateral_quintic_conditions(double lane_width, double duration);
BoundaryConditionSet lateral_septic_conditions(double lane_width, double duration);
BoundaryConditionSet longitudinal_quartic_conditions(double v_initial, double v_target,
                                                     double duration);
BoundaryConditionSet longitudinal_quintic_conditions(double v_initial, double distance,
                                                     double duration);
BoundaryConditionSet longitudinal_sextic_conditions(double v_initial, double v_target,
                                                    double distance, double duration,
                                                    double a6);

// y(0)=y'(0)=y''(0)=0, y(T)=w, y'(T)=y''(T)=0.
Polynomial lateral_quintic(double lane_width, double duration);
// Quintic conditions plus zero jerk at both ends.
Polynomial lateral_septic(double lane_width, double duration);
// x(0)=0, x'(0)=v_i, x''(0)=0, x'(T)=v_t, x''(T)=0.
Polynomial longitudinal_quartic(double v_initial, double v_target, double duration);
// x(0)=0, x'(0)=v_i, x''(0)=0, x(T)=d, x'(T)=v_i, x''(T)=0.
Polynomial longitudinal_quintic(double v_initial, double distance, double duration);
// Coefficient of t^6 pinned to a6; x(0)=0, x'(0)=v_i, x''(0)=0, x(T)=d,
// x'(T)=v_t, x''(T)=0.
Polynomial longitudinal_sextic(double v_initial, double v_target, double distance,
                               double duration, double a6);

inline constexpr double kDefaultA6 = 0.01;
inline constexpr double kNominalMinDuration = 1.0;
inline constexpr double kNominalMaxDuration = 60.0;

// Inputs to a single lane-change maneuver. Speeds in m/s, distances in m,
// duration in s. duration and distance stay empty until computed or
// supplied by the caller.
struct ManeuverParams {
  double v_initial = 0.0;
  double v_target = 0.0;
  double v_lead = 0.0;
  double relative_distance = 0.0;
  double safety_distance = 3.0;
  double lane_width = 3.6;
  std::optional<double> duration;
  std::optional<double> distance;
  double a6 = kDefaultA6;
};

// T = 2 (D_r - D_s) / (v_t + v_i - 2 v_lead). Throws InfeasibleManeuver
// when the denominator is not positive.
double maneuver_duration(const ManeuverParams& params);

// d = (T / 2)(v_t + v_i). Requires params.duration.
double maneuver_distance(const ManeuverParams& params);

// Fills in duration (from maneuver_duration) and distance (from
// maneuver_distance) where absent, then validates. Throws
// std::invalid_argument for v_i <= 0, w <= 0 or D_s < 0, and
// InfeasibleManeuver when T <= 0 or d <= 0.
ManeuverParams resolve_timing(ManeuverParams params);

enum class TrajectoryFamily {
  kQuartic4Quintic5,
  kQuintic5Quintic5,
  kSextic6Quintic5,
  kSextic6Septic7,
};

inline constexpr TrajectoryFamily kAllFamilies[] = {
    TrajectoryFamily::kQuartic4Quintic5, TrajectoryFamily::kQuintic5Quintic5,
    TrajectoryFamily::kSextic6Quintic5, TrajectoryFamily::kSextic6Septic7};

// Short names used on the command line: quartic, quintic, sextic, septic.
std::string_view to_string(TrajectoryFamily family);
std::optional<TrajectoryFamily> parse_family(std::string_view name);

struct TrajectoryPlan {
  Polynomial longitudinal;  // x(t), m
  Polynomial lateral;       // y(t), m
  double duration = 0.0;
  double distance = 0.0;
  double lane_width = 0.0;
  double v_initial = 0.0;
  double v_target = 0.0;
  double a6 = 0.0;
  TrajectoryFamily family = TrajectoryFamily::kSextic6Quintic5;
  std::vector<std::string> warnings;
};

// Builds the longitudinal/lateral pair for the family. Missing timing is
// resolved first; a duration outside [1 s, 60 s] is accepted with a warning.
TrajectoryPlan build_plan(const ManeuverParams& params, TrajectoryFamily family);

struct TrajectorySample {
  double t, x, y, vx, vy, ax, ay, jx, jy;
};

// t = 0, dt, 2 dt, ..., always ending exactly at T. Requires 0 < dt <= T.
std::vector<double> time_grid(double duration, double dt);

std::vector<TrajectorySample> sample(const TrajectoryPlan& plan, double dt);
TrajectorySample sample_at(const TrajectoryPlan& plan, double t);

}  // namespace lanecraft

#endif  // LANECRAFT_TRAJECTORY_HPP_
