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

#include "lanecraft/app/scenario_file.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace lanecraft::app {
namespace {

constexpr double kKmhPerMs = 3.6;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& at, const std::string& message) const {
    const YAML::Mark mark = at.Mark();
    if (mark.is_null()) throw ScenarioFileError(source_, 0, 0, message);
    throw ScenarioFileError(source_, mark.line + 1, mark.column + 1, message);
  }

  void expect_map(const YAML::Node& node, const std::string& what) const {
    if (!node.IsMap()) fail(node, what + " must be a mapping");
  }

  void allow_keys(const YAML::Node& map, const std::string& what,
                  std::initializer_list<std::string_view> keys) const {
    for (const auto& kv : map) {
      const std::string key = kv.first.as<std::string>();
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail(kv.first, "unknown key '" + key + "' in " + what);
      }
    }
  }

  double number(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a number");
    const std::string text = node.Scalar();
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
      fail(node, what + " must be a finite number, got '" + text + "'");
    }
    return value;
  }

  double speed(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a speed");
    try {
      return parse_speed(node.Scalar());
    } catch (const std::invalid_argument& e) {
      fail(node, what + ": " + e.what());
    }
  }

  std::string string(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a string");
    return node.Scalar();
  }

  bool boolean(const YAML::Node& node, const std::string& what) const {
    bool value = false;
    if (!node.IsScalar() || !YAML::convert<bool>::decode(node, value)) {
      fail(node, what + " must be true or false");
    }
    return value;
  }

  int lane(const YAML::Node& node, const std::string& what) const {
    const double v = number(node, what);
    if (v != kOriginalLane && v != kTargetLane) fail(node, what + " must be 0 or 1");
    return static_cast<int>(v);
  }

  double positive(const YAML::Node& node, const std::string& what) const {
    const double v = number(node, what);
    if (!(v > 0.0)) fail(node, what + " must be > 0");
    return v;
  }

  VehicleState vehicle(const YAML::Node& node, const std::string& what) const {
    expect_map(node, what);
    allow_keys(node, what, {"id", "lane", "s", "v", "length", "width"});
    VehicleState v;
    v.id = node["id"] ? string(node["id"], what + ".id") : what;
    if (node["lane"]) v.lane = lane(node["lane"], what + ".lane");
    if (node["s"]) v.s = number(node["s"], what + ".s");
    if (!node["v"]) fail(node, what + ".v is required");
    v.v = speed(node["v"], what + ".v");
    if (v.v < 0.0) fail(node["v"], what + ".v must be >= 0");
    if (node["length"]) v.length = positive(node["length"], what + ".length");
    if (node["width"]) v.width = positive(node["width"], what + ".width");
    return v;
  }

  ScenarioConfig scenario(const YAML::Node& root) const {
    expect_map(root, "scenario");
    allow_keys(root, "scenario",
               {"name", "description", "lane_width", "safety_distance", "family", "a6",
                "duration_override", "target_speed", "dt", "force_maneuver", "limits", "ego",
                "others"});
    ScenarioConfig c;
    if (root["name"]) c.name = string(root["name"], "name");
    if (root["description"]) c.description = string(root["description"], "description");

    if (!root["lane_width"]) fail(root, "lane_width is required");
    c.lane_width = positive(root["lane_width"], "lane_width");
    if (root["safety_distance"]) {
      c.safety_distance = number(root["safety_distance"], "safety_distance");
      if (c.safety_distance < 0.0) fail(root["safety_distance"], "safety_distance must be >= 0");
    }
    if (root["family"]) {
      const std::string name = string(root["family"], "family");
      const auto family = parse_family(name);
      if (!family) fail(root["family"], "family must be quartic, quintic, sextic or septic");
      c.family = *family;
    }
    if (root["a6"]) c.a6 = number(root["a6"], "a6");
    if (root["duration_override"]) {
      c.duration_override = positive(root["duration_override"], "duration_override");
    }
    if (root["target_speed"]) c.target_speed = speed(root["target_speed"], "target_speed");
    if (root["dt"]) c.dt = positive(root["dt"], "dt");
    if (root["force_maneuver"]) {
      c.force_maneuver = boolean(root["force_maneuver"], "force_maneuver");
    }

    if (const YAML::Node limits = root["limits"]) {
      expect_map(limits, "limits");
      allow_keys(limits, "limits", {"a_max", "a_min", "require_forward"});
      if (limits["a_max"]) c.limits.a_max = positive(limits["a_max"], "limits.a_max");
      if (limits["a_min"]) {
        c.limits.a_min = number(limits["a_min"], "limits.a_min");
        if (!(c.limits.a_min < 0.0)) fail(limits["a_min"], "limits.a_min must be < 0");
      }
      if (limits["require_forward"]) {
        c.limits.require_forward = boolean(limits["require_forward"], "limits.require_forward");
      }
    }

    if (!root["ego"]) fail(root, "ego is required");
    c.ego = vehicle(root["ego"], "ego");
    if (c.ego.lane != kOriginalLane) fail(root["ego"], "ego must start in lane 0");
    if (!(c.ego.v > 0.0)) fail(root["ego"]["v"], "ego.v must be > 0");

    if (const YAML::Node others = root["others"]) {
      if (!others.IsSequence()) fail(others, "others must be a list");
      for (std::size_t i = 0; i < others.size(); ++i) {
        c.others.push_back(vehicle(others[i], "others[" + std::to_string(i) + "]"));
      }
    }

    try {
      validate(c);
    } catch (const std::invalid_argument& e) {
      fail(root, e.what());
    }
    return c;
  }

 private:
  std::string source_;
};

std::string format_error(const std::string& source, int line, int column,
                         const std::string& message) {
  std::ostringstream out;
  out << source;
  if (line > 0) out << ':' << line << ':' << column;
  out << ": error: " << message;
  return out.str();
}

}  // namespace

ScenarioFileError::ScenarioFileError(std::string source, int line, int column,
                                     const std::string& message)
    : std::runtime_error(format_error(source, line, column, message)),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(message) {}

double parse_speed(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end == text.data() || !std::isfinite(value)) {
    throw std::invalid_argument("expected '<number> [m/s|km/h]', got '" + std::string(text) + "'");
  }
  const std::string_view unit = trim(text.substr(end - text.data()));
  if (unit.empty() || unit == "m/s") return value;
  if (unit == "km/h") return value / kKmhPerMs;
  throw std::invalid_argument("unknown speed unit '" + std::string(unit) + "'");
}

ScenarioConfig parse_scenario(std::string_view text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ScenarioFileError(source, e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ScenarioFileError(source, 0, 0, "empty scenario document");
  return Reader(source).scenario(root);
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFileError(path.string(), 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

}  // namespace lanecraft::app
