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

#include "lanecraft/app/output.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace lanecraft::app {
namespace {

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt::format("{:.17g}", *v) : std::string("none");
}

std::string fmt_coeffs(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (i) out += ' ';
    out += fmt::format("{:.17g}", p[i]);
  }
  return out;
}

void append_peak(std::string& out, std::string_view key, const Peak& peak) {
  out += fmt::format("{}: {:.17g}\n{}_t: {:.17g}\n", key, peak.value, key, peak.t);
}

}  // namespace

std::string csv_number(double value) { return fmt::format("{:.17g}", value); }

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
  std::string out = "t,x,y,vx,vy,ax,ay,jx,jy\n";
  for (const auto& s : samples) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n",
                       s.t, s.x, s.y, s.vx, s.vy, s.ax, s.ay, s.jx, s.jy);
  }
  return out;
}

std::string sim_csv(const SimResult& result) {
  std::string out = "t,x,y,vx,vy,ax,ay";
  for (const auto& id : result.vehicle_ids) out += ",sep_" + id;
  out += '\n';
  for (const auto& s : result.samples) {
    const auto& e = s.ego;
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}", e.t, e.x, e.y,
                       e.vx, e.vy, e.ax, e.ay);
    for (double sep : s.separations) out += ',' + csv_number(sep);
    out += '\n';
  }
  return out;
}

std::string plan_report(const ScenarioConfig& config, const TrajectoryPlan& plan,
                        const ConstraintReport& report) {
  std::string out;
  out += fmt::format("scenario: {}\n", config.name);
  out += fmt::format("family: {}\n", to_string(plan.family));
  out += fmt::format("T: {:.17g}\n", plan.duration);
  out += fmt::format("d: {:.17g}\n", plan.distance);
  out += fmt::format("lane_width: {:.17g}\n", plan.lane_width);
  out += fmt::format("v_initial: {:.17g}\n", plan.v_initial);
  out += fmt::format("v_target: {:.17g}\n", plan.v_target);
  out += fmt::format("a6: {:.17g}\n", plan.a6);
  out += fmt::format("longitudinal_coefficients: {}\n", fmt_coeffs(plan.longitudinal));
  out += fmt::format("lateral_coefficients: {}\n", fmt_coeffs(plan.lateral));
  append_peak(out, "peak_combined_accel", report.combined_accel);
  append_peak(out, "peak_longitudinal_accel", report.longitudinal_accel);
  append_peak(out, "min_longitudinal_accel", report.longitudinal_decel);
  append_peak(out, "peak_lateral_accel", report.lateral_accel);
  append_peak(out, "peak_jerk_longitudinal", report.jerk_longitudinal);
  append_peak(out, "peak_jerk_lateral", report.jerk_lateral);
  out += fmt::format("a_max: {:.17g}\n", config.limits.a_max);
  out += fmt::format("a_min: {:.17g}\n", config.limits.a_min);
  out += fmt::format("feasible: {}\n", report.feasible);
  out += fmt::format("violations: {}\n", report.violations.size());
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    out += fmt::format("first_violation: {} at t={:.17g} value={:.17g}\n", to_string(v.kind), v.t,
                       v.value);
  }
  for (const auto& w : plan.warnings) out += fmt::format("warning: {}\n", w);
  return out;
}

std::string decision_report(const ManeuverDecision& decision) {
  const DecisionFactors& f = decision.factors;
  std::string out;
  out += fmt::format("action: {}\n", to_string(decision.action));
  out += fmt::format("reason: {}\n", to_string(decision.reason));
  out += fmt::format("family: {}\n",
                     decision.plan_family ? to_string(*decision.plan_family) : "none");
  out += fmt::format("gap_target_lane: {:.17g}\n", f.gap_target_lane);
  out += fmt::format("v_target_lead: {}\n", fmt_opt(f.v_target_lead));
  out += fmt::format("v_target_lag: {}\n", fmt_opt(f.v_target_lag));
  out += fmt::format("v_ego: {:.17g}\n", f.v_ego);
  out += fmt::format("dist_to_lead_current: {:.17g}\n", f.dist_to_lead_current);
  out += fmt::format("v_lead_current: {}\n", fmt_opt(f.v_lead_current));
  out += fmt::format("est_maneuver_time: {}\n", fmt_opt(f.est_maneuver_time));
  out += fmt::format("est_maneuver_distance: {}\n", fmt_opt(f.est_maneuver_distance));
  out += fmt::format("time_overridden: {}\n", f.time_overridden);
  out += fmt::format("safety_distance: {:.17g}\n", f.safety_distance);
  if (!f.infeasible_reason.empty()) out += fmt::format("infeasible_reason: {}\n", f.infeasible_reason);
  return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "family,a6,T,d,x_T,y_T,vx_T,peak_combined_accel,peak_longitudinal_accel,"
      "min_longitudinal_accel,peak_lateral_accel,peak_jerk_longitudinal,peak_jerk_lateral,"
      "feasible\n";
  for (const auto& r : rows) {
    const ConstraintReport& c = r.report;
    out += fmt::format("{},{}", to_string(r.plan.family), csv_number(r.plan.a6));
    for (double v : {r.plan.duration, r.plan.distance, r.end.x, r.end.y, r.end.vx,
                     c.combined_accel.value, c.longitudinal_accel.value,
                     c.longitudinal_decel.value, c.lateral_accel.value,
                     c.jerk_longitudinal.value, c.jerk_lateral.value}) {
      out += ',' + csv_number(v);
    }
    out += c.feasible ? ",true\n" : ",false\n";
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace lanecraft::app
