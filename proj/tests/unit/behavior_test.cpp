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

#include "lanecraft/behavior.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "support/scenarios.hpp"

namespace lanecraft {
namespace {

using testing::overtake_scenario;

ScenarioConfig open_road() {
  ScenarioConfig c = overtake_scenario();
  c.others.clear();
  return c;
}

TEST(ComputeFactorsTest, EmptyTargetLaneIsUnbounded) {
  const DecisionFactors f = compute_factors(open_road());
  EXPECT_TRUE(std::isinf(f.gap_target_lane));
  EXPECT_FALSE(f.v_target_lead.has_value());
  EXPECT_FALSE(f.v_target_lag.has_value());
  EXPECT_TRUE(std::isinf(f.dist_to_lead_current));
  EXPECT_TRUE(f.target_lane.empty());
}

TEST(ComputeFactorsTest, OvertakeScenarioLeadDistance) {
  const DecisionFactors f = compute_factors(overtake_scenario());
  EXPECT_DOUBLE_EQ(f.dist_to_lead_current, 30.0);  // configured D_r
  EXPECT_DOUBLE_EQ(*f.v_lead_current, 30.558);
  EXPECT_DOUBLE_EQ(f.v_ego, 27.778);
  EXPECT_TRUE(f.time_overridden);
  EXPECT_DOUBLE_EQ(*f.est_maneuver_time, 4.0);
  EXPECT_NEAR(*f.est_maneuver_distance, 2.0 * (27.778 + 29.167), 1e-12);
}

TEST(ComputeFactorsTest, TargetLaneGapGeometry) {
  ScenarioConfig c = open_road();
  c.others = {{"lead", kTargetLane, 80.0, 30.0, 5.0, 2.0},
              {"lag", kTargetLane, -20.0, 30.0, 5.0, 2.0},
              {"far", kTargetLane, 200.0, 30.0, 5.0, 2.0}};
  // Rear edge of the lead minus front edge of the lag.
  const double want = (80.0 - 2.5) - (-20.0 + 2.5);
  const DecisionFactors f = compute_factors(c);
  EXPECT_DOUBLE_EQ(f.gap_target_lane, want);
  EXPECT_DOUBLE_EQ(want, 95.0);
  EXPECT_EQ(f.target_lane.size(), 3u);
}

TEST(ComputeFactorsTest, DurationFromLeadGapWhenNotOverridden) {
  ScenarioConfig c = overtake_scenario();
  c.duration_override.reset();
  c.target_speed = 35.0;
  c.others[0].s = 50.0 + 5.0;  // D_r = 50
  const DecisionFactors f = compute_factors(c);
  ASSERT_TRUE(f.est_maneuver_time.has_value());
  EXPECT_NEAR(*f.est_maneuver_time, 56.558363417569194, 1e-9);
  EXPECT_FALSE(f.time_overridden);
}

TEST(ComputeFactorsTest, InfeasibleWhenLeadIsFaster) {
  ScenarioConfig c = overtake_scenario();
  c.duration_override.reset();
  const DecisionFactors f = compute_factors(c);
  EXPECT_FALSE(f.est_maneuver_time.has_value());
  EXPECT_FALSE(f.infeasible_reason.empty());
}

TEST(DecideTest, EmptyRoadInitiates) {
  const ManeuverDecision d = decide(compute_factors(open_road()), GapPolicy{});
  EXPECT_EQ(d.action, Action::kInitiateLaneChange);
  EXPECT_EQ(d.reason, GateReason::kAllGatesPassed);
}

TEST(DecideTest, SmallGapKeepsLane) {
  DecisionFactors f = compute_factors(open_road());
  f.gap_target_lane = 8.0;
  const ManeuverDecision d = decide(f, GapPolicy{});
  EXPECT_EQ(d.action, Action::kKeepLane);
  EXPECT_EQ(d.reason, GateReason::kGapTooSmall);
}

TEST(DecideTest, OvertakeScenarioInitiates) {
  const ManeuverDecision d = plan_maneuver(overtake_scenario());
  EXPECT_EQ(d.action, Action::kInitiateLaneChange);
  EXPECT_EQ(d.plan_family, TrajectoryFamily::kSextic6Quintic5);
}

TEST(DecideTest, InfeasibleAborts) {
  ScenarioConfig c = overtake_scenario();
  c.duration_override.reset();
  const ManeuverDecision d = plan_maneuver(c);
  EXPECT_EQ(d.action, Action::kAbortInfeasible);
  EXPECT_EQ(d.reason, GateReason::kManeuverInfeasible);
  EXPECT_FALSE(d.plan_family.has_value());

  c.force_maneuver = true;  // forcing cannot invent a duration
  EXPECT_EQ(plan_maneuver(c).action, Action::kAbortInfeasible);
}

TEST(DecideTest, VehicleAlongsideIsTargetLaneConflict) {
  ScenarioConfig c = overtake_scenario();
  c.others.push_back({"side", kTargetLane, 2.0, 28.0, 5.0, 2.0});
  const ManeuverDecision d = plan_maneuver(c);
  EXPECT_EQ(d.action, Action::kKeepLane);
  EXPECT_EQ(d.reason, GateReason::kTargetLaneConflict);

  c.force_maneuver = true;
  const ManeuverDecision forced = plan_maneuver(c);
  EXPECT_EQ(forced.action, Action::kInitiateLaneChange);
  EXPECT_EQ(forced.reason, GateReason::kForced);
}

TEST(DecideTest, FastApproachingLagIsConflict) {
  ScenarioConfig c = overtake_scenario();
  // 40 m behind but 15 m/s faster: closes ~60 m within 4 s.
  c.others.push_back({"lag", kTargetLane, -40.0, 43.0, 5.0, 2.0});
  EXPECT_EQ(plan_maneuver(c).reason, GateReason::kTargetLaneConflict);
}

TEST(DecideTest, SlowLeadTooClose) {
  ScenarioConfig c = overtake_scenario();
  c.others[0].v = 20.0;  // ego gains ~35 m on a 30 m gap
  const ManeuverDecision d = plan_maneuver(c);
  EXPECT_EQ(d.action, Action::kKeepLane);
  EXPECT_EQ(d.reason, GateReason::kLeadTooClose);
}

TEST(DecideTest, DefaultPolicyMinGap) {
  EXPECT_DOUBLE_EQ(default_policy(overtake_scenario()).min_gap, 11.0);
  EXPECT_DOUBLE_EQ(GapPolicy{}.min_gap, 11.0);
}

TEST(DecideTest, Names) {
  EXPECT_EQ(to_string(Action::kInitiateLaneChange), "InitiateLaneChange");
  EXPECT_EQ(to_string(GateReason::kGapTooSmall), "GapTooSmall");
}

TEST(BehaviorPropertyTest, LargerGapNeverRevokesInitiation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> grow(0, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const ScenarioConfig c = testing::random_scenario(rng);
    DecisionFactors f = compute_factors(c);
    const GapPolicy policy = default_policy(c);
    const ManeuverDecision before = decide(f, policy);
    f.gap_target_lane += grow(rng);
    const ManeuverDecision after = decide(f, policy);
    if (before.action == Action::kInitiateLaneChange) {
      EXPECT_EQ(after.action, Action::kInitiateLaneChange) << "trial " << trial;
    }
  }
}

TEST(BehaviorPropertyTest, Deterministic) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const ScenarioConfig c = testing::random_scenario(rng);
    const ManeuverDecision a = plan_maneuver(c), b = plan_maneuver(c);
    EXPECT_EQ(a.action, b.action);
    EXPECT_EQ(a.reason, b.reason);
  }
}

TEST(BehaviorPropertyTest, InitiationSurvivesCheckpointProjection) {
  std::mt19937_64 rng(47);
  int initiated = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const ScenarioConfig c = testing::random_scenario(rng);
    const ManeuverDecision d = plan_maneuver(c);
    if (d.action != Action::kInitiateLaneChange) continue;
    ++initiated;
    EXPECT_TRUE(testing::projection_clear(c, *d.factors.est_maneuver_time,
                                          *d.factors.est_maneuver_distance))
        << "trial " << trial;
  }
  EXPECT_GT(initiated, 50);
}

}  // namespace
}  // namespace lanecraft
