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

#ifndef LANECRAFT_APP_LOGGING_HPP_
#define LANECRAFT_APP_LOGGING_HPP_

namespace lanecraft::app {

// Configures the default spdlog logger (stderr) from LANECRAFT_LOG, one of
// error, info, debug. Unset or unknown values mean error.
void init_logging();

}  // namespace lanecraft::app

#endif  // LANECRAFT_APP_LOGGING_HPP_
