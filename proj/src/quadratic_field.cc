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

#include "tuttecert/quadratic_field.h"

#include <stdexcept>
#include <string>

namespace tuttecert {

QuadraticNumber QuadraticNumber::GoldenSquare() {
  return {Rational(3, 2), Rational(1, 2)};
}

QuadraticNumber QuadraticNumber::GoldenS() { return {3, -1}; }

int QuadraticNumber::Sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  const int by_norm = sgn(Norm());
  return sa > 0 ? by_norm : -by_norm;
}

Rational QuadraticNumber::Norm() const { return a_ * a_ - 5 * b_ * b_; }

Rational QuadraticNumber::Approximate(int decimal_digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimal_digits));
  BigInt root;
  const BigInt radicand = 5 * scale * scale;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Rational sqrt5(root, scale);
  sqrt5.canonicalize();
  return a_ + b_ * sqrt5;
}

double QuadraticNumber::ToDouble() const { return Approximate(40).get_d(); }

std::string QuadraticNumber::ToString() const {
  if (b_ == 0) return RenderFraction(a_);
  return RenderFraction(a_) + (b_ < 0 ? "-" : "+") + RenderFraction(abs(b_)) +
         "*sqrt5";
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& other) {
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& other) {
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& other) {
  Rational a = a_ * other.a_ + 5 * b_ * other.b_;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& other) {
  const Rational norm = other.Norm();
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt 5)");
  *this *= other.Conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

}  // namespace tuttecert
