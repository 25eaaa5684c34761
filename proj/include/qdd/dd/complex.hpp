// Copyright 2026 The qdd developers
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

#pragma once

#include <cmath>
#include <complex>

namespace dd {

/// Complex scalar used for all edge weights. Comparison inside the package
/// is exact: weights are unified through the package's value table, so
/// equal-within-tolerance values share one representative.
struct Complex {
  double re{0.0};
  double im{0.0};

  constexpr bool operator==(const Complex&) const = default;

  [[nodiscard]] constexpr bool exactlyZero() const {
    return re == 0.0 && im == 0.0;
  }
  [[nodiscard]] constexpr bool exactlyOne() const {
    return re == 1.0 && im == 0.0;
  }
  [[nodiscard]] std::complex<double> toStd() const { return {re, im}; }
};

constexpr Complex operator+(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}
constexpr Complex operator-(const Complex& a, const Complex& b) {
  return {a.re - b.re, a.im - b.im};
}
constexpr Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator/(const Complex& a, const Complex& b) {
  const double denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom,
          (a.im * b.re - a.re * b.im) / denom};
}
constexpr Complex conj(const Complex& a) { return {a.re, -a.im}; }
constexpr double abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline double abs(const Complex& a) { return std::sqrt(abs2(a)); }

/// Tolerance-based equality: both components within eps.
inline bool approxEqual(const Complex& a, const Complex& b, double eps) {
  return std::abs(a.re - b.re) <= eps && std::abs(a.im - b.im) <= eps;
}
inline bool approxZero(const Complex& a, double eps) {
  return std::abs(a.re) <= eps && std::abs(a.im) <= eps;
}

} // namespace dd
