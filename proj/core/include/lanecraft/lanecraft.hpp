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

#ifndef LANECRAFT_LANECRAFT_HPP_
#define LANECRAFT_LANECRAFT_HPP_

#include "lanecraft/behavior.hpp"
#include "lanecraft/constraints.hpp"
#include "lanecraft/linear_system.hpp"
#include "lanecraft/polynomial.hpp"
#include "lanecraft/scenario.hpp"
#include "lanecraft/simulation.hpp"
#include "lanecraft/trajectory.hpp"

#endif  // LANECRAFT_LANECRAFT_HPP_
