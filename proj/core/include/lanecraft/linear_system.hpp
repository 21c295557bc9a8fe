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

#ifndef LANECRAFT_LINEAR_SYSTEM_HPP_
#define LANECRAFT_LINEAR_SYSTEM_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lanecraft {

// Raised when elimination meets a pivot below kPivotTolerance. For boundary
// systems this means the conditions are degenerate (e.g. a zero horizon).
class SingularSystem : public std::runtime_error {
 public:
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPivotTolerance = 1e-12;
inline constexpr std::size_t kMaxSystemDimension = 8;

// Square dense system A x = b, A stored row-major.
class LinearSystem {
 public:
  LinearSystem(std::size_t dim, std::vector<double> matrix, std::vector<double> rhs);
  explicit LinearSystem(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double& a(std::size_t row, std::size_t col) { return matrix_[row * dim_ + col]; }
  double a(std::size_t row, std::size_t col) const { return matrix_[row * dim_ + col]; }
  double& b(std::size_t row) { return rhs_[row]; }
  double b(std::size_t row) const { return rhs_[row]; }

  std::span<const double> matrix() const { return matrix_; }
  std::span<const double> rhs() const { return rhs_; }

  // ||A x - b||_inf
  double residual(std::span<const double> x) const;

 private:
  std::size_t dim_;
  std::vector<double> matrix_;
  std::vector<double> rhs_;
};

// Gaussian elimination with partial pivoting. Throws SingularSystem when a
// pivot magnitude falls below kPivotTolerance, std::invalid_argument when
// the dimension exceeds kMaxSystemDimension.
std::vector<double> solve(const LinearSystem& sys);

}  // namespace lanecraft

#endif  // LANECRAFT_LINEAR_SYSTEM_HPP_
