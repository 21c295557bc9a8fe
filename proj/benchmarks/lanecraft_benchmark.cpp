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

#include <benchmark/benchmark.h>

#include "lanecraft/lanecraft.hpp"

namespace lanecraft {
namespace {

ManeuverParams overtake_params() {
  ManeuverParams p;
  p.v_initial = 27.778;
  p.v_target = 29.167;
  p.v_lead = 30.558;
  p.relative_distance = 30.0;
  p.lane_width = 3.6;
  p.duration = 4.0;
  p.a6 = 0.01;
  return p;
}

ScenarioConfig overtake_scenario() {
  ScenarioConfig c;
  c.ego = {"E", kOriginalLane, 0.0, 27.778, 5.0, 2.0};
  c.others = {{"B", kOriginalLane, 35.0, 30.558, 5.0, 2.0},
              {"F", kTargetLane, 150.0, 31.0, 5.0, 2.0},
              {"R", kTargetLane, -120.0, 26.0, 5.0, 2.0}};
  c.target_speed = 29.167;
  c.duration_override = 4.0;
  return c;
}

void BM_SolveSeptic(benchmark::State& state) {
  const BoundaryConditionSet bc = lateral_septic_conditions(3.6, 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(bc.solve());
}
BENCHMARK(BM_SolveSeptic);

void BM_SolveSextic(benchmark::State& state) {
  const BoundaryConditionSet bc = longitudinal_sextic_conditions(27.778, 29.167, 113.89, 4.0, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(bc.solve());
}
BENCHMARK(BM_SolveSextic);

void BM_BuildPlan(benchmark::State& state) {
  const ManeuverParams p = overtake_params();
  const auto family = kAllFamilies[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(build_plan(p, family));
  state.SetLabel(std::string(to_string(family)));
}
BENCHMARK(BM_BuildPlan)->DenseRange(0, 3);

void BM_Sample(benchmark::State& state) {
  const TrajectoryPlan plan = build_plan(overtake_params(), TrajectoryFamily::kSextic6Quintic5);
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(plan, dt));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(plan.duration / dt));
}
BENCHMARK(BM_Sample)->Arg(100)->Arg(1000);

void BM_CheckConstraints(benchmark::State& state) {
  const TrajectoryPlan plan = build_plan(overtake_params(), TrajectoryFamily::kSextic6Quintic5);
  const ConstraintLimits limits;
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check(plan, limits, dt));
}
BENCHMARK(BM_CheckConstraints)->Arg(100)->Arg(1000);

void BM_Decide(benchmark::State& state) {
  const ScenarioConfig c = overtake_scenario();
  for (auto _ : state) benchmark::DoNotOptimize(plan_maneuver(c));
}
BENCHMARK(BM_Decide);

void BM_Simulate(benchmark::State& state) {
  ScenarioConfig c = overtake_scenario();
  c.dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace lanecraft

BENCHMARK_MAIN();
