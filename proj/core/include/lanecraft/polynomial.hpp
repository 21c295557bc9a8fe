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

#ifndef LANECRAFT_POLYNOMIAL_HPP_
#define LANECRAFT_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lanecraft {

// Real polynomial in t with coefficients stored in ascending-power order,
// p(t) = c[0] + c[1] t + ... + c[n] t^n. Always holds at least one
// coefficient; the default value is the zero polynomial of degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial Zero(std::size_t degree = 0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }

  // Horner evaluation.
  double operator()(double t) const;
  double eval(double t) const { return (*this)(t); }

  // Exact order-th derivative. order == 0 is the identity; order > degree
  // yields the zero polynomial.
  Polynomial derivative(std::size_t order = 1) const;

  // Value of the order-th derivative at t without materializing it.
  double derivative_at(double t, std::size_t order) const;

  bool is_zero() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace lanecraft

#endif  // LANECRAFT_POLYNOMIAL_HPP_
