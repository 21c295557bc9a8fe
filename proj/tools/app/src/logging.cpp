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

#include "lanecraft/app/logging.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <string_view>

namespace lanecraft::app {

void init_logging() {
  auto logger = spdlog::get("lanecraft");
  if (!logger) logger = spdlog::stderr_color_mt("lanecraft");
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("LANECRAFT_LOG");
  const std::string_view level = env ? env : "";
  if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else if (level == "info") {
    logger->set_level(spdlog::level::info);
  } else {
    logger->set_level(spdlog::level::err);
  }
  spdlog::set_default_logger(std::move(logger));
}

}  // namespace lanecraft::app
