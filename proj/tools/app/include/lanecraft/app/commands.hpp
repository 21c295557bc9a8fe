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

#ifndef LANECRAFT_APP_COMMANDS_HPP_
#define LANECRAFT_APP_COMMANDS_HPP_

#include <filesystem>
#include <optional>
#include <vector>

#include "lanecraft/trajectory.hpp"

namespace lanecraft::app {

// Process exit codes. 0 is the only success code.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,         // parse or validation failure
  kExitConstraintViolation = 2,  // plan exceeds the acceleration envelope
  kExitInfeasible = 3,           // no maneuver duration / planner abort
  kExitCollision = 4,            // simulated safety zones overlapped
  kExitIoError = 5,              // output could not be written
};

struct PlanOptions {
  std::filesystem::path scenario;
  std::filesystem::path out_dir;
  std::optional<TrajectoryFamily> family;
  std::optional<double> a6;
  std::optional<double> duration;
  std::optional<double> dt;
};

struct SimulateOptions {
  std::filesystem::path scenario;
  std::filesystem::path out_dir;
  bool force_maneuver = false;
};

struct CompareOptions {
  std::filesystem::path scenario;
  std::filesystem::path out_dir;
  std::vector<double> a6_sweep;  // empty: the scenario's a6
};

// Writes trajectory.csv, report.txt and path_xy.svg, lateral_y.svg,
// longitudinal_x.svg, acceleration.svg.
int cmd_plan(const PlanOptions& options);

// Writes sim.csv and decision.txt; prints CLEAR or COLLISION.
int cmd_simulate(const SimulateOptions& options);

// Writes comparison.csv (one row per family and a6) and overlay_xy.svg.
int cmd_compare(const CompareOptions& options);

}  // namespace lanecraft::app

#endif  // LANECRAFT_APP_COMMANDS_HPP_
