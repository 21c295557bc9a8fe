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

#include "lanecraft/app/commands.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <stdexcept>

#include "lanecraft/app/output.hpp"
#include "lanecraft/app/scenario_file.hpp"
#include "lanecraft/app/svg_plot.hpp"
#include "lanecraft/constraints.hpp"
#include "lanecraft/simulation.hpp"

namespace lanecraft::app {
namespace {

std::optional<ScenarioConfig> load(const std::filesystem::path& path) {
  try {
    ScenarioConfig c = load_scenario(path);
    spdlog::info("loaded scenario '{}' from {}", c.name, path.string());
    return c;
  } catch (const ScenarioFileError& e) {
    fmt::print(stderr, "{}\n", e.what());
    return std::nullopt;
  }
}

bool prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    fmt::print(stderr, "{}: error: cannot create output directory: {}\n", dir.string(),
               ec.message());
    return false;
  }
  return true;
}

// Check step: the scenario dt, refined so the horizon has at least 10 steps.
double check_step(const ScenarioConfig& c, double duration) {
  return std::min(c.dt, duration / 10.0);
}

Series column(std::string label, const std::vector<TrajectorySample>& samples,
              double TrajectorySample::*xs, double TrajectorySample::*ys, bool dashed = false) {
  Series s{std::move(label), {}, {}, dashed};
  s.xs.reserve(samples.size());
  s.ys.reserve(samples.size());
  for (const auto& p : samples) {
    s.xs.push_back(p.*xs);
    s.ys.push_back(p.*ys);
  }
  return s;
}

void write_plan_plots(const std::filesystem::path& dir, const std::vector<TrajectorySample>& s) {
  using TS = TrajectorySample;
  write_text(dir / "path_xy.svg", LinePlot("Lane change path", "x [m]", "y [m]")
                                      .add(column("path", s, &TS::x, &TS::y))
                                      .render());
  write_text(dir / "lateral_y.svg", LinePlot("Lateral displacement", "t [s]", "y [m]")
                                        .add(column("y", s, &TS::t, &TS::y))
                                        .render());
  write_text(dir / "longitudinal_x.svg", LinePlot("Longitudinal displacement", "t [s]", "x [m]")
                                             .add(column("x", s, &TS::t, &TS::x))
                                             .render());
  Series combined{"combined", {}, {}, true};
  for (const auto& p : s) {
    combined.xs.push_back(p.t);
    combined.ys.push_back(std::hypot(p.ax, p.ay));
  }
  write_text(dir / "acceleration.svg", LinePlot("Acceleration", "t [s]", "a [m/s^2]")
                                           .add(column("longitudinal", s, &TS::t, &TS::ax))
                                           .add(column("lateral", s, &TS::t, &TS::ay))
                                           .add(std::move(combined))
                                           .render());
}

}  // namespace

int cmd_plan(const PlanOptions& options) {
  std::optional<ScenarioConfig> loaded = load(options.scenario);
  if (!loaded) return kExitInvalidInput;
  ScenarioConfig c = std::move(*loaded);
  if (options.family) c.family = *options.family;
  if (options.a6) c.a6 = *options.a6;
  if (options.duration) c.duration_override = *options.duration;
  if (options.dt) c.dt = *options.dt;
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "{}: error: {}\n", options.scenario.string(), e.what());
    return kExitInvalidInput;
  }

  TrajectoryPlan plan;
  try {
    plan = build_plan(maneuver_params(c), c.family);
  } catch (const InfeasibleManeuver& e) {
    fmt::print(stderr, "{}: infeasible maneuver: {}\n", options.scenario.string(), e.what());
    return kExitInfeasible;
  }
  for (const auto& w : plan.warnings) spdlog::warn("{}", w);
  if (c.dt > plan.duration) {
    fmt::print(stderr, "{}: error: dt {} exceeds maneuver duration {}\n",
               options.scenario.string(), c.dt, plan.duration);
    return kExitInvalidInput;
  }

  const std::vector<TrajectorySample> samples = sample(plan, c.dt);
  const ConstraintReport report = check(plan, c.limits, check_step(c, plan.duration));
  spdlog::info("family={} T={} d={} peak f_a={}", to_string(plan.family), plan.duration,
               plan.distance, report.combined_accel.value);

  if (!prepare_out_dir(options.out_dir)) return kExitIoError;
  try {
    write_text(options.out_dir / "trajectory.csv", trajectory_csv(samples));
    write_text(options.out_dir / "report.txt", plan_report(c, plan, report));
    write_plan_plots(options.out_dir, samples);
  } catch (const std::runtime_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIoError;
  }

  if (!report.feasible) {
    const Violation& v = report.violations.front();
    fmt::print("VIOLATION {} at t={:.3f} s (value {:.6g}), {} violating samples\n",
               to_string(v.kind), v.t, v.value, report.violations.size());
    return kExitConstraintViolation;
  }
  fmt::print("FEASIBLE family={} T={:.6g} s d={:.6g} m peak_combined_accel={:.6g} m/s^2\n",
             to_string(plan.family), plan.duration, plan.distance, report.combined_accel.value);
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& options) {
  std::optional<ScenarioConfig> loaded = load(options.scenario);
  if (!loaded) return kExitInvalidInput;
  ScenarioConfig c = std::move(*loaded);
  if (options.force_maneuver) c.force_maneuver = true;
  if (!prepare_out_dir(options.out_dir)) return kExitIoError;

  const ManeuverDecision decision = plan_maneuver(c);
  spdlog::info("decision: {} ({})", to_string(decision.action), to_string(decision.reason));
  try {
    if (decision.action == Action::kAbortInfeasible) {
      write_text(options.out_dir / "decision.txt", decision_report(decision) + "verdict: ABORT\n");
      fmt::print("ABORT {}\n", decision.factors.infeasible_reason);
      return kExitInfeasible;
    }
    const SimResult result = run(c);
    const char* verdict = result.collision ? "COLLISION" : "CLEAR";
    std::string text = decision_report(result.decision);
    if (!result.samples.empty()) {
      text += fmt::format("min_separation: {:.17g}\nmin_separation_t: {:.17g}\n"
                          "min_separation_vehicle: {}\n",
                          result.min_separation.value, result.min_separation.t,
                          result.min_separation.vehicle_id.empty()
                              ? "none"
                              : result.min_separation.vehicle_id);
    }
    if (result.constraint_report) {
      text += fmt::format("plan_feasible: {}\n", result.constraint_report->feasible);
    }
    text += fmt::format("verdict: {}\n", verdict);
    write_text(options.out_dir / "sim.csv", sim_csv(result));
    write_text(options.out_dir / "decision.txt", text);
    fmt::print("{}\n", verdict);
    return result.collision ? kExitCollision : kExitOk;
  } catch (const InfeasibleManeuver& e) {
    fmt::print("ABORT {}\n", e.what());
    return kExitInfeasible;
  } catch (const std::runtime_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIoError;
  }
}

int cmd_compare(const CompareOptions& options) {
  std::optional<ScenarioConfig> loaded = load(options.scenario);
  if (!loaded) return kExitInvalidInput;
  const ScenarioConfig c = std::move(*loaded);
  const std::vector<double> sweep =
      options.a6_sweep.empty() ? std::vector<double>{c.a6} : options.a6_sweep;

  std::vector<ComparisonRow> rows;
  try {
    for (double a6 : sweep) {
      ManeuverParams params = maneuver_params(c);
      params.a6 = a6;
      for (TrajectoryFamily family : kAllFamilies) {
        TrajectoryPlan plan = build_plan(params, family);
        ConstraintReport report = check(plan, c.limits, check_step(c, plan.duration));
        const TrajectorySample end = sample_at(plan, plan.duration);
        rows.push_back({std::move(plan), std::move(report), end});
      }
    }
  } catch (const InfeasibleManeuver& e) {
    fmt::print(stderr, "{}: infeasible maneuver: {}\n", options.scenario.string(), e.what());
    return kExitInfeasible;
  }

  LinePlot overlay("Path by trajectory family", "x [m]", "y [m]");
  for (std::size_t i = 0; i < std::size(kAllFamilies); ++i) {
    const TrajectoryPlan& plan = rows[i].plan;
    const auto samples = sample(plan, std::min(c.dt, plan.duration));
    overlay.add(column(std::string(to_string(plan.family)), samples, &TrajectorySample::x,
                       &TrajectorySample::y, i % 2 == 1));
  }

  if (!prepare_out_dir(options.out_dir)) return kExitIoError;
  try {
    write_text(options.out_dir / "comparison.csv", comparison_csv(rows));
    write_text(options.out_dir / "overlay_xy.svg", overlay.render());
  } catch (const std::runtime_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIoError;
  }
  for (const auto& r : rows) {
    fmt::print("{:<8} a6={:<8.4g} T={:.6g} d={:.6g} peak_combined_accel={:.6g} {}\n",
               to_string(r.plan.family), r.plan.a6, r.plan.duration, r.plan.distance,
               r.report.combined_accel.value, r.report.feasible ? "feasible" : "violation");
  }
  return kExitOk;
}

}  // namespace lanecraft::app
