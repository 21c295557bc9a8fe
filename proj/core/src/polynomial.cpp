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

#include "lanecraft/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lanecraft {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::Zero(std::size_t degree) {
  return Polynomial(std::vector<double>(degree + 1, 0.0));
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t order) const {
  if (order == 0) return *this;
  if (order > degree()) return Zero();

  std::vector<double> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    // i * (i-1) * ... * (i-order+1)
    double falling = 1.0;
    for (std::size_t k = 0; k < order; ++k) falling *= static_cast<double>(i - k);
    out[i - order] = falling * coeffs_[i];
  }
  return Polynomial(std::move(out));
}

double Polynomial::derivative_at(double t, std::size_t order) const {
  if (order > degree()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > order;) {
    double falling = 1.0;
    for (std::size_t k = 0; k < order; ++k) falling *= static_cast<double>(i - k);
    acc = acc * t + falling * coeffs_[i];
  }
  return acc;
}

bool Polynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](double c) { return c == 0.0; });
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-1.0) * b;
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> out(p.coeffs_);
  for (double& c : out) c *= s;
  return Polynomial(std::move(out));
}

}  // namespace lanecraft
