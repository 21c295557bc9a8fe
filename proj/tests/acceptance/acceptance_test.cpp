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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// usage: acceptance_test <lanecraft-binary> <scenario-dir>

#include <fmt/format.h>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lanecraft/lanecraft.hpp"
#include "support/oracles.hpp"
#include "support/scenarios.hpp"
#include "support/temp_dir.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lanecraft;

struct Outcome {
  bool pass;
  std::string detail;
};

fs::path g_cli;
fs::path g_scenarios;

// |p^(order)(t) - value| / max(1, |value|), evaluated in long double.
double oracle_residual(const Polynomial& p, std::size_t order, double t, double value) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    acc += static_cast<long double>(p[i]) * oracle::monomial_derivative(i, order, t);
  }
  return static_cast<double>(std::fabs(acc - value)) / std::max(1.0, std::abs(value));
}

double oracle_eval(const Polynomial& p, std::size_t order, double t) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    acc += static_cast<long double>(p[i]) * oracle::monomial_derivative(i, order, t);
  }
  return static_cast<double>(acc);
}

using Conds = std::vector<oracle::Condition>;

double worst_residual(const Polynomial& p, const Conds& conds) {
  double worst = 0.0;
  for (const auto& c : conds) worst = std::max(worst, oracle_residual(p, c.order, c.t, c.value));
  return worst;
}

// 1. Boundary conditions hold for randomized inputs in the validated ranges:
// speeds 10..40 m/s, w 2.5..4.5 m, T 1..60 s (sextic: T 1..20 s, |a6| <= 0.02).
Outcome boundary_residuals() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> speed(10, 40), width(2.5, 4.5), dur(1, 60),
      short_dur(1, 20), a6_d(-0.02, 0.02), stretch(0.8, 1.2);
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double vi = speed(rng), vt = speed(rng), w = width(rng), T = dur(rng);
    const double d = stretch(rng) * T / 2 * (vi + vt);
    const double Ts = short_dur(rng), a6 = a6_d(rng);
    const double ds = stretch(rng) * Ts / 2 * (vi + vt);

    worst = std::max(worst, worst_residual(lateral_quintic(w, T),
                                           {{0, 0, 0}, {1, 0, 0}, {2, 0, 0},
                                            {0, T, w}, {1, T, 0}, {2, T, 0}}));
    worst = std::max(worst, worst_residual(lateral_septic(w, T),
                                           {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0},
                                            {0, T, w}, {1, T, 0}, {2, T, 0}, {3, T, 0}}));
    worst = std::max(worst, worst_residual(longitudinal_quartic(vi, vt, T),
                                           {{0, 0, 0}, {1, 0, vi}, {2, 0, 0},
                                            {1, T, vt}, {2, T, 0}}));
    worst = std::max(worst, worst_residual(longitudinal_quintic(vi, d, T),
                                           {{0, 0, 0}, {1, 0, vi}, {2, 0, 0},
                                            {0, T, d}, {1, T, vi}, {2, T, 0}}));
    const Polynomial sx = longitudinal_sextic(vi, vt, ds, Ts, a6);
    worst = std::max(worst, worst_residual(sx, {{0, 0, 0}, {1, 0, vi}, {2, 0, 0},
                                                {0, Ts, ds}, {1, Ts, vt}, {2, Ts, 0}}));
    if (sx[6] != a6) worst = std::max(worst, std::abs(sx[6] - a6));
    checked += 5;
  }
  return {worst <= kTol, fmt::format("{} tuples, {} polynomials, worst relative residual {:.3g} "
                                     "(tol {:g})", 200, checked, worst, kTol)};
}

// 2. Lateral profiles of every family match the closed forms.
Outcome closed_form_lateral() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  int cases = 0;
  bool zeros_exact = true;
  for (double T : {1.0, 2.5, 5.0, 10.0}) {
    for (double w : {3.0, 3.6, 4.0}) {
      for (TrajectoryFamily f : kAllFamilies) {
        ManeuverParams p;
        p.v_initial = 27.778;
        p.v_target = 27.778;
        p.lane_width = w;
        p.duration = T;
        p.a6 = 0.0;
        const Polynomial y = build_plan(p, f).lateral;
        const bool septic = f == TrajectoryFamily::kSextic6Septic7;
        const std::vector<double> want = septic ? oracle::septic_lateral_closed_form(w, T)
                                                : oracle::quintic_lateral_closed_form(w, T);
        if (y.degree() + 1 != want.size()) return {false, "lateral degree mismatch"};
        for (std::size_t i = 0; i < want.size(); ++i) {
          if (want[i] == 0.0) {
            zeros_exact = zeros_exact && y[i] == 0.0;
          } else {
            worst = std::max(worst, oracle::relative_error(y[i], want[i]));
          }
        }
        ++cases;
      }
    }
  }
  return {cases == 48 && worst <= kTol && zeros_exact,
          fmt::format("{} cases, worst relative error {:.3g} (tol {:g}), zero coefficients {}",
                      cases, worst, kTol, zeros_exact ? "exact" : "NOT exact")};
}

// 3. Overtake scenario: ego ends at y = w and always moves forward.
Outcome overtake_end_state() {
  const SimResult r = run(testing::overtake_scenario());
  if (r.samples.empty()) return {false, "no maneuver executed"};
  const double y_end = r.samples.back().ego.y;
  const double err = std::abs(y_end - 3.6);
  bool increasing = true;
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    increasing = increasing && r.samples[i].ego.x > r.samples[i - 1].ego.x;
  }
  return {err <= 1e-6 && increasing,
          fmt::format("y(T) = {:.12f} m (|err| {:.3g}, tol 1e-6), x strictly increasing over {} "
                      "samples: {}",
                      y_end, err, r.samples.size(), increasing ? "yes" : "no")};
}

// 4. Acceleration envelope for the sextic overtake plan on a 1 ms grid.
Outcome acceleration_envelope() {
  const ScenarioConfig c = testing::overtake_scenario();
  const TrajectoryPlan plan = build_plan(maneuver_params(c), TrajectoryFamily::kSextic6Quintic5);
  if (plan.a6 != 0.01) return {false, "a6 not 0.01"};
  const double T = plan.duration;
  const int n = static_cast<int>(std::llround(T / 0.001));
  double peak_fa = 0.0, min_ax = INFINITY;
  for (int k = 0; k <= n; ++k) {
    const double t = std::min(k * 0.001, T);
    const double ax = oracle_eval(plan.longitudinal, 2, t), ay = oracle_eval(plan.lateral, 2, t);
    peak_fa = std::max(peak_fa, std::sqrt(ax * ax + ay * ay));
    min_ax = std::min(min_ax, ax);
  }
  const double ax_T = std::abs(oracle_eval(plan.longitudinal, 2, T));
  const double ay_T = std::abs(oracle_eval(plan.lateral, 2, T));
  const ConstraintReport lib = check(plan, c.limits, 0.001);
  const bool pass = peak_fa < 2.0 && min_ax >= -3.0 && ax_T <= 1e-9 && ay_T <= 1e-9 && lib.feasible;
  return {pass, fmt::format("T = {} s, peak f_a {:.6f} < 2, min x'' {:.6f} >= -3, |x''(T)| {:.3g}, "
                            "|y''(T)| {:.3g} (tol 1e-9), library check {}",
                            T, peak_fa, min_ax, ax_T, ay_T, lib.feasible ? "feasible" : "violated")};
}

// 5. a6 changes only the longitudinal profile; a6 = 0 reduces to a quintic.
Outcome a6_isolation() {
  ManeuverParams p;
  p.v_initial = 27.778;
  p.v_target = 29.167;
  p.lane_width = 3.6;
  p.duration = 4.0;
  p.a6 = 0.0;
  const TrajectoryPlan base = build_plan(p, TrajectoryFamily::kSextic6Quintic5);
  bool lateral_identical = true, longitudinal_changes = true;
  for (double a6 : {0.005, 0.01, 0.02}) {
    p.a6 = a6;
    const TrajectoryPlan plan = build_plan(p, TrajectoryFamily::kSextic6Quintic5);
    lateral_identical = lateral_identical && plan.lateral == base.lateral;
    longitudinal_changes = longitudinal_changes && plan.longitudinal != base.longitudinal;
  }

  // Quintic from the same six end conditions, solved without the pinned term.
  const double T = base.duration, d = base.distance;
  const Polynomial quintic =
      BoundaryConditionSet(T, {{0, Endpoint::kStart, 0.0}, {1, Endpoint::kStart, p.v_initial},
                               {2, Endpoint::kStart, 0.0}, {0, Endpoint::kEnd, d},
                               {1, Endpoint::kEnd, p.v_target}, {2, Endpoint::kEnd, 0.0}})
          .solve();
  double worst = 0.0;
  for (std::size_t i = 0; i <= 6; ++i) {
    const double q = i <= quintic.degree() ? quintic[i] : 0.0;
    worst = std::max(worst, std::abs(base.longitudinal[i] - q) / std::max(1.0, std::abs(q)));
  }

  // With v_t = v_i the quintic family uses the same conditions.
  p.v_target = p.v_initial;
  p.a6 = 0.0;
  const Polynomial sx = build_plan(p, TrajectoryFamily::kSextic6Quintic5).longitudinal;
  const Polynomial qx = build_plan(p, TrajectoryFamily::kQuintic5Quintic5).longitudinal;
  for (std::size_t i = 0; i <= 6; ++i) {
    const double q = i <= qx.degree() ? qx[i] : 0.0;
    worst = std::max(worst, std::abs(sx[i] - q) / std::max(1.0, std::abs(q)));
  }
  return {lateral_identical && longitudinal_changes && worst <= 1e-12,
          fmt::format("lateral bit-identical across a6 {{0, 0.005, 0.01, 0.02}}: {}, longitudinal "
                      "changes: {}, sextic(a6=0) vs quintic worst diff {:.3g} (tol 1e-12)",
                      lateral_identical ? "yes" : "no", longitudinal_changes ? "yes" : "no",
                      worst)};
}

// 6. Overtake scenario is collision-free and stable under time-step refinement.
Outcome collision_free() {
  ScenarioConfig c = testing::overtake_scenario();
  const SimResult coarse = run(c);
  c.dt = 0.001;
  const SimResult fine = run(c);
  const double diff = std::abs(coarse.min_separation.value - fine.min_separation.value);
  const bool pass = !coarse.samples.empty() && !coarse.collision && !fine.collision &&
                    coarse.min_separation.value > 0.0 && diff < 0.01;
  return {pass, fmt::format("min separation {:.6f} m at dt 0.01, {:.6f} m at dt 0.001, "
                            "difference {:.3g} m (tol 0.01)",
                            coarse.min_separation.value, fine.min_separation.value, diff)};
}

// 7. Duration and distance match the arithmetic oracle; bad denominators raise.
Outcome timing_oracle() {
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> speed(10, 40), unit(0, 1), gap(5, 200), ds_d(0, 5);
  double worst = 0.0;
  int feasible = 0;
  while (feasible < 100) {
    ManeuverParams p;
    p.v_initial = speed(rng);
    p.v_target = speed(rng);
    const double half = (p.v_initial + p.v_target) / 2.0;
    p.v_lead = half - (0.5 + 10 * unit(rng));
    p.safety_distance = ds_d(rng);
    p.relative_distance = p.safety_distance + gap(rng);
    const double T = maneuver_duration(p);
    const double T_want = oracle::duration_oracle(p.relative_distance, p.safety_distance,
                                                  p.v_initial, p.v_target, p.v_lead);
    p.duration = T;
    const double d = maneuver_distance(p);
    const double d_want = oracle::distance_oracle(T_want, p.v_initial, p.v_target);
    worst = std::max({worst, oracle::relative_error(T, T_want), oracle::relative_error(d, d_want)});
    ++feasible;
  }
  int raised = 0, infeasible = 0;
  for (int k = 0; k < 100; ++k) {
    ManeuverParams p;
    p.v_initial = speed(rng);
    p.v_target = speed(rng);
    // k == 0: denominator exactly zero.
    p.v_lead = (p.v_initial + p.v_target) / 2.0 + (k == 0 ? 0.0 : 10 * unit(rng));
    p.relative_distance = 50;
    ++infeasible;
    try {
      maneuver_duration(p);
    } catch (const InfeasibleManeuver&) {
      ++raised;
    }
  }
  return {worst <= 1e-12 && raised == infeasible,
          fmt::format("{} feasible inputs, worst relative error {:.3g} (tol 1e-12); "
                      "{}/{} infeasible inputs raised",
                      feasible, worst, raised, infeasible)};
}

// 8. Every initiated lane change is clear under an independent projection;
// widening the target-lane gap never revokes an initiation.
Outcome gate_soundness() {
  std::mt19937_64 rng(1009);
  int initiated = 0, unsound = 0;
  for (int i = 0; i < 500; ++i) {
    const ScenarioConfig c = testing::random_scenario(rng);
    const ManeuverDecision d = plan_maneuver(c);
    if (d.action != Action::kInitiateLaneChange) continue;
    ++initiated;
    if (!testing::projection_clear(c, *d.factors.est_maneuver_time,
                                   *d.factors.est_maneuver_distance)) {
      ++unsound;
    }
  }

  std::uniform_real_distribution<double> widen(0.5, 40);
  int pairs = 0, revoked = 0, draws = 0;
  while (pairs < 200 && draws < 100000) {
    ++draws;
    ScenarioConfig c = testing::random_scenario(rng);
    if (plan_maneuver(c).action != Action::kInitiateLaneChange) continue;
    const double delta = widen(rng);
    for (auto& o : c.others) {
      if (o.lane != kTargetLane) continue;
      o.s += o.s >= c.ego.s ? delta : -delta;
    }
    ++pairs;
    if (plan_maneuver(c).action != Action::kInitiateLaneChange) ++revoked;
  }
  return {initiated > 0 && unsound == 0 && pairs == 200 && revoked == 0,
          fmt::format("500 scenarios, {} initiations, {} failed the 0.1 s projection; "
                      "{} widened pairs, {} revoked",
                      initiated, unsound, pairs, revoked)};
}

int run_cli(const std::string& args) {
  const std::string cmd = fmt::format("\"{}\" {} >/dev/null 2>&1", g_cli.string(), args);
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 9. Byte-identical plan output and the documented exit codes on the corpus.
Outcome cli_determinism() {
  testing::TempDir tmp;
  const fs::path scenario = g_scenarios / "overtake.yaml";
  const int a = run_cli(fmt::format("plan \"{}\" --family sextic --out \"{}\"", scenario.string(),
                                    (tmp.path() / "a").string()));
  const int b = run_cli(fmt::format("plan \"{}\" --family sextic --out \"{}\"", scenario.string(),
                                    (tmp.path() / "b").string()));
  const std::string csv_a = testing::read_file(tmp.path() / "a" / "trajectory.csv");
  const std::string csv_b = testing::read_file(tmp.path() / "b" / "trajectory.csv");
  const bool identical = a == 0 && b == 0 && !csv_a.empty() && csv_a == csv_b;

  struct Case {
    const char* label;
    const char* command;
    const char* file;
    const char* flags;
    int expected;
  };
  const Case corpus[] = {
      {"valid", "plan", "valid.yaml", "--family sextic", 0},
      {"invalid-schema", "plan", "invalid_schema.yaml", "", 1},
      {"infeasible", "plan", "infeasible.yaml", "", 3},
      {"constraint-violating", "plan", "constraint_violation.yaml", "", 2},
      {"collision", "simulate", "collision.yaml", "--force-maneuver", 4},
      {"clear", "simulate", "clear.yaml", "", 0},
  };
  int ok = 0;
  std::string mismatches;
  for (const Case& k : corpus) {
    const int code = run_cli(fmt::format("{} \"{}\" --out \"{}\" {}", k.command,
                                         (g_scenarios / "corpus" / k.file).string(),
                                         (tmp.path() / k.label).string(), k.flags));
    if (code == k.expected) {
      ++ok;
    } else {
      mismatches += fmt::format(" {}: got {} want {};", k.label, code, k.expected);
    }
  }
  return {identical && ok == 6,
          fmt::format("trajectory.csv byte-identical across runs: {} ({} bytes); exit codes "
                      "{}/6 as documented{}",
                      identical ? "yes" : "no", csv_a.size(), ok, mismatches)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    fmt::print(stderr, "usage: {} <lanecraft-binary> <scenario-dir>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_scenarios = argv[2];

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"boundary-condition residuals", boundary_residuals},
      {"closed-form lateral coefficients", closed_form_lateral},
      {"overtake scenario end state", overtake_end_state},
      {"acceleration envelope", acceleration_envelope},
      {"a6 isolation", a6_isolation},
      {"collision-free verdict", collision_free},
      {"duration/distance oracle", timing_oracle},
      {"behavior gate soundness", gate_soundness},
      {"CLI determinism and exit codes", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("unexpected exception: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    fmt::print("{} {}. {}: {} [{:.2f} s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
               o.detail, secs);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
