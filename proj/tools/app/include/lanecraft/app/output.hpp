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

#ifndef LANECRAFT_APP_OUTPUT_HPP_
#define LANECRAFT_APP_OUTPUT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "lanecraft/behavior.hpp"
#include "lanecraft/constraints.hpp"
#include "lanecraft/scenario.hpp"
#include "lanecraft/simulation.hpp"
#include "lanecraft/trajectory.hpp"

namespace lanecraft::app {

// 17 significant digits; parses back to the same double.
std::string csv_number(double value);

// t,x,y,vx,vy,ax,ay,jx,jy
std::string trajectory_csv(const std::vector<TrajectorySample>& samples);

// t,x,y,vx,vy,ax,ay followed by one sep_<id> column per vehicle.
std::string sim_csv(const SimResult& result);

// key: value lines describing a plan and its constraint check.
std::string plan_report(const ScenarioConfig& config, const TrajectoryPlan& plan,
                        const ConstraintReport& report);

// key: value lines describing a behavior decision.
std::string decision_report(const ManeuverDecision& decision);

struct ComparisonRow {
  TrajectoryPlan plan;
  ConstraintReport report;
  TrajectorySample end;
};

std::string comparison_csv(const std::vector<ComparisonRow>& rows);

// Throws std::runtime_error when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lanecraft::app

#endif  // LANECRAFT_APP_OUTPUT_HPP_
