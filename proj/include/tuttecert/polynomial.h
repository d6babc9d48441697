// Copyright 2023 The Authors.
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

#ifndef TUTTECERT_POLYNOMIAL_H_
#define TUTTECERT_POLYNOMIAL_H_

#include <map>
#include <string>
#include <utility>

#include "tuttecert/rational.h"

namespace tuttecert {

// Polynomial in x and y with exact rational coefficients. Zero coefficients
// are never stored, so equality is structural.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x degree, y degree)

  BivariatePolynomial() = default;

  static BivariatePolynomial Constant(const Rational& c);
  static BivariatePolynomial Monomial(const Rational& c, int i, int j);
  static BivariatePolynomial X() { return Monomial(1, 1, 0); }
  static BivariatePolynomial Y() { return Monomial(1, 0, 1); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational Coefficient(int i, int j) const;
  bool IsZero() const { return terms_.empty(); }
  int TermCount() const { return static_cast<int>(terms_.size()); }
  // Sum of all coefficients, i.e. the value at (1, 1).
  Rational CoefficientSum() const;

  // Adds c * x^i y^j.
  void AddTerm(const Rational& c, int i, int j);

  Rational Evaluate(const Rational& x, const Rational& y) const;
  double EvaluateDouble(double x, double y) const;
  // p(y, x).
  BivariatePolynomial Transpose() const;

  // Terms in graded-lexicographic order: "x^3 + x^2 + x + y",
  // "1/4*x^3 - 2*x*y + 1/4", "0" for the zero polynomial.
  std::string ToString() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const Rational& scalar);

  friend BivariatePolynomial operator+(BivariatePolynomial l,
                                       const BivariatePolynomial& r) {
    return l += r;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial l,
                                       const BivariatePolynomial& r) {
    return l -= r;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& l,
                                       const BivariatePolynomial& r);
  friend BivariatePolynomial operator*(BivariatePolynomial p,
                                       const Rational& scalar) {
    return p *= scalar;
  }
  friend bool operator==(const BivariatePolynomial& l,
                         const BivariatePolynomial& r) {
    return l.terms_ == r.terms_;
  }

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace tuttecert

#endif  // TUTTECERT_POLYNOMIAL_H_
