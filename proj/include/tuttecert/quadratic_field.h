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

#ifndef TUTTECERT_QUADRATIC_FIELD_H_
#define TUTTECERT_QUADRATIC_FIELD_H_

#include <string>

#include "tuttecert/rational.h"

namespace tuttecert {

// An exact element a + b*sqrt(5) of Q(sqrt 5). Field operations stay exact;
// ordering is decided by sign analysis, never by floating point.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(int value) : a_(value) {}  // NOLINT(runtime/explicit)
  QuadraticNumber(const Rational& value) : a_(value) {}  // NOLINT
  QuadraticNumber(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static QuadraticNumber Sqrt5() { return QuadraticNumber(0, 1); }
  // (3 + sqrt 5) / 2, the square of the golden ratio.
  static QuadraticNumber GoldenSquare();
  // 3 - sqrt 5, which equals (6 + 2 sqrt 5) / (7 + 3 sqrt 5).
  static QuadraticNumber GoldenS();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  // -1, 0 or +1.
  int Sign() const;
  QuadraticNumber Conjugate() const { return {a_, -b_}; }
  // a^2 - 5 b^2.
  Rational Norm() const;
  bool IsRational() const { return b_ == 0; }

  // A rational within 10^-decimal_digits * (1 + |b|) of the true value.
  Rational Approximate(int decimal_digits) const;
  double ToDouble() const;
  // "a + b*sqrt5" with a and b as fractions.
  std::string ToString() const;

  QuadraticNumber operator-() const { return {-a_, -b_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& other);
  QuadraticNumber& operator-=(const QuadraticNumber& other);
  QuadraticNumber& operator*=(const QuadraticNumber& other);
  QuadraticNumber& operator/=(const QuadraticNumber& other);

  friend QuadraticNumber operator+(QuadraticNumber l, const QuadraticNumber& r) {
    return l += r;
  }
  friend QuadraticNumber operator-(QuadraticNumber l, const QuadraticNumber& r) {
    return l -= r;
  }
  friend QuadraticNumber operator*(QuadraticNumber l, const QuadraticNumber& r) {
    return l *= r;
  }
  friend QuadraticNumber operator/(QuadraticNumber l, const QuadraticNumber& r) {
    return l /= r;
  }
  friend bool operator==(const QuadraticNumber& l, const QuadraticNumber& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator<(const QuadraticNumber& l, const QuadraticNumber& r) {
    return (l - r).Sign() < 0;
  }
  friend bool operator>(const QuadraticNumber& l, const QuadraticNumber& r) {
    return r < l;
  }
  friend bool operator<=(const QuadraticNumber& l, const QuadraticNumber& r) {
    return !(r < l);
  }
  friend bool operator>=(const QuadraticNumber& l, const QuadraticNumber& r) {
    return !(l < r);
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace tuttecert

#endif  // TUTTECERT_QUADRATIC_FIELD_H_
