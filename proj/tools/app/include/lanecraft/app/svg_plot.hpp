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

#ifndef LANECRAFT_APP_SVG_PLOT_HPP_
#define LANECRAFT_APP_SVG_PLOT_HPP_

#include <string>
#include <vector>

namespace lanecraft::app {

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  bool dashed = false;
};

// Minimal standalone SVG line chart: frame, ticks on "nice" 1/2/5 steps,
// axis labels, one polyline per series and a legend when there is more
// than one series.
class LinePlot {
 public:
  LinePlot(std::string title, std::string x_label, std::string y_label);

  LinePlot& add(Series series);
  std::string render(int width = 720, int height = 440) const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
};

// Tick positions covering [lo, hi] with roughly `target` intervals.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace lanecraft::app

#endif  // LANECRAFT_APP_SVG_PLOT_HPP_
