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

#include "lanecraft/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace lanecraft {
namespace {

// d^order/dt^order of t^power.
double monomial_derivative(std::size_t power, std::size_t order, double t) {
  if (order > power) return 0.0;
  double falling = 1.0;
  for (std::size_t k = 0; k < order; ++k) falling *= static_cast<double>(power - k);
  return falling * std::pow(t, static_cast<double>(power - order));
}

}  // namespace

BoundaryConditionSet::BoundaryConditionSet(double horizon,
                                           std::vector<BoundaryCondition> conditions,
                                           std::vector<PinnedCoefficient> pinned)
    : horizon_(horizon), conditions_(std::move(conditions)), pinned_(std::move(pinned)) {
  if (!(horizon_ > 0.0) || !std::isfinite(horizon_)) {
    throw SingularSystem("boundary conditions need a positive finite horizon");
  }
  const std::size_t n = coefficient_count();
  if (n == 0 || n > kMaxSystemDimension) {
    throw std::invalid_argument("boundary conditions: coefficient count out of range");
  }
  for (std::size_t i = 0; i < conditions_.size(); ++i) {
    if (conditions_[i].order > 3) {
      throw std::invalid_argument("boundary conditions: derivative order above 3");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (conditions_[j].order == conditions_[i].order &&
          conditions_[j].at == conditions_[i].at) {
        throw std::invalid_argument("boundary conditions: duplicate (order, endpoint)");
      }
    }
  }
  for (std::size_t i = 0; i < pinned_.size(); ++i) {
    if (pinned_[i].index >= n) {
      throw std::invalid_argument("boundary conditions: pinned index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pinned_[j].index == pinned_[i].index) {
        throw std::invalid_argument("boundary conditions: coefficient pinned twice");
      }
    }
  }
}

LinearSystem BoundaryConditionSet::to_system() const {
  const std::size_t n = coefficient_count();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_pinned = std::any_of(pinned_.begin(), pinned_.end(),
                                       [i](const auto& p) { return p.index == i; });
    if (!is_pinned) free.push_back(i);
  }

  LinearSystem sys(free.size());
  for (std::size_t r = 0; r < conditions_.size(); ++r) {
    const auto& bc = conditions_[r];
    const double t = bc.at == Endpoint::kStart ? 0.0 : horizon_;
    double rhs = bc.value;
    for (const auto& p : pinned_) rhs -= monomial_derivative(p.index, bc.order, t) * p.value;
    sys.b(r) = rhs;
    for (std::size_t c = 0; c < free.size(); ++c) {
      sys.a(r, c) = monomial_derivative(free[c], bc.order, t);
    }
  }
  return sys;
}

Polynomial BoundaryConditionSet::solve() const {
  const LinearSystem full = to_system();
  const std::size_t m = full.dim();

  // A row with one nonzero (every condition at t = 0) fixes its unknown
  // directly. Resolving those first keeps such coefficients exact.
  std::vector<std::optional<double>> fixed(m);
  std::vector<bool> row_used(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t nonzero = 0, col = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (full.a(r, c) != 0.0) ++nonzero, col = c;
    }
    if (nonzero != 1 || fixed[col]) continue;
    if (std::abs(full.a(r, col)) < kPivotTolerance) {
      throw SingularSystem("boundary conditions: degenerate start condition");
    }
    fixed[col] = full.b(r) / full.a(r, col);
    row_used[r] = true;
  }

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (!row_used[i]) rows.push_back(i);
    if (!fixed[i]) cols.push_back(i);
  }

  LinearSystem reduced(cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double rhs = full.b(rows[r]);
    for (std::size_t c = 0; c < m; ++c) {
      if (fixed[c]) rhs -= full.a(rows[r], c) * *fixed[c];
    }
    reduced.b(r) = rhs;
    for (std::size_t c = 0; c < cols.size(); ++c) reduced.a(r, c) = full.a(rows[r], cols[c]);
  }

  // Columns of t^i grow like T^i; scale each to unit max magnitude.
  std::vector<double> scale(cols.size(), 1.0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    double peak = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) peak = std::max(peak, std::abs(reduced.a(r, c)));
    if (peak > 0.0) {
      scale[c] = 1.0 / peak;
      for (std::size_t r = 0; r < rows.size(); ++r) reduced.a(r, c) *= scale[c];
    }
  }
  const std::vector<double> scaled = lanecraft::solve(reduced);
  for (std::size_t c = 0; c < cols.size(); ++c) fixed[cols[c]] = scaled[c] * scale[c];

  std::vector<double> coeffs(coefficient_count(), 0.0);
  for (const auto& p : pinned_) coeffs[p.index] = p.value;
  std::size_t k = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const bool is_pinned = std::any_of(pinned_.begin(), pinned_.end(),
                                       [i](const auto& p) { return p.index == i; });
    if (!is_pinned) coeffs[i] = *fixed[k++];
  }
  return Polynomial(std::move(coeffs));
}

double BoundaryConditionSet::max_relative_residual(const Polynomial& p) const {
  double worst = 0.0;
  for (const auto& bc : conditions_) {
    const double t = bc.at == Endpoint::kStart ? 0.0 : horizon_;
    const double err = std::abs(p.derivative_at(t, bc.order) - bc.value);
    worst = std::max(worst, err / std::max(1.0, std::abs(bc.value)));
  }
  return worst;
}

BoundaryConditionSet lateral_quintic_conditions(double lane_width, double duration) {
  return BoundaryConditionSet(duration, {{0, Endpoint::kStart, 0.0},
                                         {1, Endpoint::kStart, 0.0},
                                         {2, Endpoint::kStart, 0.0},
                                         {0, Endpoint::kEnd, lane_width},
                                         {1, Endpoint::kEnd, 0.0},
                                         {2, Endpoint::kEnd, 0.0}});
}

BoundaryConditionSet lateral_septic_conditions(double lane_width, double duration) {
  return BoundaryConditionSet(duration, {{0, Endpoint::kStart, 0.0},
                                         {1, Endpoint::kStart, 0.0},
                                         {2, Endpoint::kStart, 0.0},
                                         {3, Endpoint::kStart, 0.0},
                                         {0, Endpoint::kEnd, lane_width},
                                         {1, Endpoint::kEnd, 0.0},
                                         {2, Endpoint::kEnd, 0.0},
                                         {3, Endpoint::kEnd, 0.0}});
}

BoundaryConditionSet longitudinal_quartic_conditions(double v_initial, double v_target,
                                                     double duration) {
  return BoundaryConditionSet(duration, {{0, Endpoint::kStart, 0.0},
                                         {1, Endpoint::kStart, v_initial},
                                         {2, Endpoint::kStart, 0.0},
                                         {1, Endpoint::kEnd, v_target},
                                         {2, Endpoint::kEnd, 0.0}});
}

BoundaryConditionSet longitudinal_quintic_conditions(double v_initial, double distance,
                                                     double duration) {
  return BoundaryConditionSet(duration, {{0, Endpoint::kStart, 0.0},
                                         {1, Endpoint::kStart, v_initial},
                                         {2, Endpoint::kStart, 0.0},
                                         {0, Endpoint::kEnd, distance},
                                         {1, Endpoint::kEnd, v_initial},
                                         {2, Endpoint::kEnd, 0.0}});
}

BoundaryConditionSet longitudinal_sextic_conditions(double v_initial, double v_target,
                                                    double distance, double duration,
                                                    double a6) {
  return BoundaryConditionSet(duration,
                              {{0, Endpoint::kStart, 0.0},
                               {1, Endpoint::kStart, v_initial},
                               {2, Endpoint::kStart, 0.0},
                               {0, Endpoint::kEnd, distance},
                               {1, Endpoint::kEnd, v_target},
                               {2, Endpoint::kEnd, 0.0}},
                              {{6, a6}});
}

Polynomial lateral_quintic(double lane_width, double duration) {
  return lateral_quintic_conditions(lane_width, duration).solve();
}

Polynomial lateral_septic(double lane_width, double duration) {
  return lateral_septic_conditions(lane_width, duration).solve();
}

Polynomial longitudinal_quartic(double v_initial, double v_target, double duration) {
  return longitudinal_quartic_conditions(v_initial, v_target, duration).solve();
}

Polynomial longitudinal_quintic(double v_initial, double distance, double duration) {
  return longitudinal_quintic_conditions(v_initial, distance, duration).solve();
}

Polynomial longitudinal_sextic(double v_initial, double v_target, double distance,
                               double duration, double a6) {
  return longitudinal_sextic_conditions(v_initial, v_target, distance, duration, a6).solve();
}

double maneuver_duration(const ManeuverParams& params) {
  const double closing = params.v_target + params.v_initial - 2.0 * params.v_lead;
  if (!(closing > 0.0)) {
    std::ostringstream msg;
    msg << "maneuver duration undefined: v_t + v_i - 2 v_lead = " << closing << " <= 0";
    throw InfeasibleManeuver(msg.str());
  }
  return 2.0 * (params.relative_distance - params.safety_distance) / closing;
}

double maneuver_distance(const ManeuverParams& params) {
  if (!params.duration) {
    throw std::invalid_argument("maneuver_distance: duration not set");
  }
  return *params.duration / 2.0 * (params.v_target + params.v_initial);
}

ManeuverParams resolve_timing(ManeuverParams params) {
  if (!(params.v_initial > 0.0)) throw std::invalid_argument("initial speed must be > 0");
  if (!(params.lane_width > 0.0)) throw std::invalid_argument("lane width must be > 0");
  if (!(params.safety_distance >= 0.0)) {
    throw std::invalid_argument("safety distance must be >= 0");
  }
  if (!params.duration) params.duration = maneuver_duration(params);
  if (!(*params.duration > 0.0) || !std::isfinite(*params.duration)) {
    throw InfeasibleManeuver("maneuver duration must be positive, got " +
                             std::to_string(*params.duration));
  }
  if (!params.distance) params.distance = maneuver_distance(params);
  if (!(*params.distance > 0.0)) {
    throw InfeasibleManeuver("maneuver distance must be positive, got " +
                             std::to_string(*params.distance));
  }
  return params;
}

std::string_view to_string(TrajectoryFamily family) {
  switch (family) {
    case TrajectoryFamily::kQuartic4Quintic5: return "quartic";
    case TrajectoryFamily::kQuintic5Quintic5: return "quintic";
    case TrajectoryFamily::kSextic6Quintic5: return "sextic";
    case TrajectoryFamily::kSextic6Septic7: return "septic";
  }
  return "unknown";
}

std::optional<TrajectoryFamily> parse_family(std::string_view name) {
  for (TrajectoryFamily f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

TrajectoryPlan build_plan(const ManeuverParams& params, TrajectoryFamily family) {
  const ManeuverParams p = resolve_timing(params);
  const double T = *p.duration;
  const double d = *p.distance;

  TrajectoryPlan plan;
  plan.duration = T;
  plan.distance = d;
  plan.lane_width = p.lane_width;
  plan.v_initial = p.v_initial;
  plan.v_target = p.v_target;
  plan.a6 = p.a6;
  plan.family = family;

  switch (family) {
    case TrajectoryFamily::kQuartic4Quintic5:
      plan.longitudinal = longitudinal_quartic(p.v_initial, p.v_target, T);
      plan.lateral = lateral_quintic(p.lane_width, T);
      break;
    case TrajectoryFamily::kQuintic5Quintic5:
      plan.longitudinal = longitudinal_quintic(p.v_initial, d, T);
      plan.lateral = lateral_quintic(p.lane_width, T);
      break;
    case TrajectoryFamily::kSextic6Quintic5:
      plan.longitudinal = longitudinal_sextic(p.v_initial, p.v_target, d, T, p.a6);
      plan.lateral = lateral_quintic(p.lane_width, T);
      break;
    case TrajectoryFamily::kSextic6Septic7:
      plan.longitudinal = longitudinal_sextic(p.v_initial, p.v_target, d, T, p.a6);
      plan.lateral = lateral_septic(p.lane_width, T);
      break;
  }

  if (T < kNominalMinDuration || T > kNominalMaxDuration) {
    std::ostringstream msg;
    msg << "duration " << T << " s outside nominal window [" << kNominalMinDuration
        << ", " << kNominalMaxDuration << "] s";
    plan.warnings.push_back(msg.str());
  }
  return plan;
}

std::vector<double> time_grid(double duration, double dt) {
  if (!(dt > 0.0) || !(dt <= duration)) {
    throw std::invalid_argument("time_grid: need 0 < dt <= T");
  }
  const double steps = duration / dt;
  auto n = static_cast<std::size_t>(std::llround(steps));
  if (std::abs(static_cast<double>(n) * dt - duration) > 1e-9 * std::max(1.0, duration)) {
    n = static_cast<std::size_t>(std::floor(steps)) + 1;
  }
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) grid.push_back(static_cast<double>(k) * dt);
  grid.push_back(duration);
  return grid;
}

TrajectorySample sample_at(const TrajectoryPlan& plan, double t) {
  const auto& x = plan.longitudinal;
  const auto& y = plan.lateral;
  return {t,
          x(t),
          y(t),
          x.derivative_at(t, 1),
          y.derivative_at(t, 1),
          x.derivative_at(t, 2),
          y.derivative_at(t, 2),
          x.derivative_at(t, 3),
          y.derivative_at(t, 3)};
}

std::vector<TrajectorySample> sample(const TrajectoryPlan& plan, double dt) {
  std::vector<TrajectorySample> out;
  for (double t : time_grid(plan.duration, dt)) out.push_back(sample_at(plan, t));
  return out;
}

}  // namespace lanecraft
