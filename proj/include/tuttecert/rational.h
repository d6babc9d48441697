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

#ifndef TUTTECERT_RATIONAL_H_
#define TUTTECERT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tuttecert {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "3", "-2.355", "471/200" or "1.5e-3" into an exact rational. Decimal
// strings are never routed through binary floating point.
Rational ParseRational(std::string_view text);

// Renders |value| rounded (half to even) to |significant_digits| significant
// digits in fixed notation, e.g. 1.04089600000000 for 15 digits.
std::string RenderSignificant(const Rational& value, int significant_digits);

// "p/q", or "p" for integers.
std::string RenderFraction(const Rational& value);

Rational Power(const Rational& base, unsigned exponent);

// Binary exponentiation for any type with a unit constructor and operator*.
template <typename T>
T PowerBySquaring(T base, unsigned exponent) {
  T result(1);
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt Factorial(unsigned n);

BigInt FloorOf(const Rational& value);
BigInt CeilOf(const Rational& value);

}  // namespace tuttecert

#endif  // TUTTECERT_RATIONAL_H_
