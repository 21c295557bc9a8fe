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

#include <CLI11.hpp>

#include <string>

#include "lanecraft/app/commands.hpp"
#include "lanecraft/app/logging.hpp"

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  scenario parse or validation failure\n"
    "  2  plan violates the acceleration envelope\n"
    "  3  maneuver infeasible (planner abort)\n"
    "  4  collision in simulation\n"
    "  5  output could not be written\n";

}  // namespace

int main(int argc, char** argv) {
  using namespace lanecraft::app;
  init_logging();

  CLI::App app{"Polynomial lane-change planner and two-lane simulator"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  PlanOptions plan;
  std::string family;
  auto* plan_cmd = app.add_subcommand("plan", "Generate and check one trajectory");
  plan_cmd->add_option("scenario", plan.scenario, "Scenario YAML file")->required();
  plan_cmd->add_option("--family", family, "quartic | quintic | sextic | septic")
      ->check(CLI::IsMember({"quartic", "quintic", "sextic", "septic"}));
  plan_cmd->add_option("--out", plan.out_dir, "Output directory")->required();
  plan_cmd->add_option("--a6", plan.a6, "Pinned sixth-order coefficient");
  plan_cmd->add_option("--T", plan.duration, "Maneuver duration override [s]")
      ->check(CLI::PositiveNumber);
  plan_cmd->add_option("--dt", plan.dt, "Sample step [s]")->check(CLI::PositiveNumber);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the behavior planner and simulator");
  sim_cmd->add_option("scenario", sim.scenario, "Scenario YAML file")->required();
  sim_cmd->add_option("--out", sim.out_dir, "Output directory")->required();
  sim_cmd->add_flag("--force-maneuver", sim.force_maneuver, "Bypass the gap gates");

  CompareOptions cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Evaluate all trajectory families");
  cmp_cmd->add_option("scenario", cmp.scenario, "Scenario YAML file")->required();
  cmp_cmd->add_option("--out", cmp.out_dir, "Output directory")->required();
  cmp_cmd->add_option("--a6-sweep", cmp.a6_sweep, "Comma-separated a6 values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (*plan_cmd) {
    if (!family.empty()) plan.family = lanecraft::parse_family(family);
    return cmd_plan(plan);
  }
  if (*sim_cmd) return cmd_simulate(sim);
  return cmd_compare(cmp);
}
