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

#ifndef LANECRAFT_APP_SCENARIO_FILE_HPP_
#define LANECRAFT_APP_SCENARIO_FILE_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lanecraft/scenario.hpp"

namespace lanecraft::app {

// Parse or validation failure, located in the source document. line and
// column are 1-based; 0 means the location is unknown.
class ScenarioFileError : public std::runtime_error {
 public:
  ScenarioFileError(std::string source, int line, int column, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  int line_;
  int column_;
  std::string message_;
};

// Speed literal: a bare number (m/s) or a string "<number> m/s" or
// "<number> km/h". km/h values are divided by 3.6.
double parse_speed(std::string_view text);

// Scenario documents are YAML with the keys described in
// schemas/scenario.schema.json. Unknown keys are rejected. The result has
// passed lanecraft::validate().
ScenarioConfig parse_scenario(std::string_view text, const std::string& source = "<string>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace lanecraft::app

#endif  // LANECRAFT_APP_SCENARIO_FILE_HPP_
