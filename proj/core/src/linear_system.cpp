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

#include "lanecraft/linear_system.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lanecraft {

LinearSystem::LinearSystem(std::size_t dim, std::vector<double> matrix,
                           std::vector<double> rhs)
    : dim_(dim), matrix_(std::move(matrix)), rhs_(std::move(rhs)) {
  if (matrix_.size() != dim_ * dim_) {
    throw std::invalid_argument("LinearSystem: matrix is not dim x dim");
  }
  if (rhs_.size() != dim_) {
    throw std::invalid_argument("LinearSystem: rhs length differs from dim");
  }
}

LinearSystem::LinearSystem(std::size_t dim)
    : LinearSystem(dim, std::vector<double>(dim * dim, 0.0),
                   std::vector<double>(dim, 0.0)) {}

double LinearSystem::residual(std::span<const double> x) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    double acc = -rhs_[r];
    for (std::size_t c = 0; c < dim_; ++c) acc += a(r, c) * x[c];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

std::vector<double> solve(const LinearSystem& sys) {
  const std::size_t n = sys.dim();
  if (n > kMaxSystemDimension) {
    throw std::invalid_argument("solve: dimension exceeds " +
                                std::to_string(kMaxSystemDimension));
  }

  std::vector<double> m(sys.matrix().begin(), sys.matrix().end());
  std::vector<double> x(sys.rhs().begin(), sys.rhs().end());
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * n + c]; };

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    }
    if (!(std::abs(at(pivot, col)) >= kPivotTolerance)) {
      throw SingularSystem("solve: pivot below tolerance in column " +
                           std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(col, c), at(pivot, c));
      std::swap(x[col], x[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = at(r, col) / at(col, col);
      if (f == 0.0) continue;
      at(r, col) = 0.0;
      for (std::size_t c = col + 1; c < n; ++c) at(r, c) -= f * at(col, c);
      x[r] -= f * x[col];
    }
  }

  for (std::size_t r = n; r-- > 0;) {
    double acc = x[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= at(r, c) * x[c];
    x[r] = acc / at(r, r);
  }
  return x;
}

}  // namespace lanecraft
