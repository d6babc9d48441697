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

#include "tuttecert/polynomial.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace tuttecert {

BivariatePolynomial BivariatePolynomial::Constant(const Rational& c) {
  return Monomial(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::Monomial(const Rational& c, int i,
                                                  int j) {
  BivariatePolynomial p;
  p.AddTerm(c, i, j);
  return p;
}

Rational BivariatePolynomial::Coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivariatePolynomial::CoefficientSum() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void BivariatePolynomial::AddTerm(const Rational& c, int i, int j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exponents{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BivariatePolynomial::Evaluate(const Rational& x,
                                       const Rational& y) const {
  // Cache powers; exponents are small and dense.
  int max_i = 0;
  int max_j = 0;
  for (const auto& [e, c] : terms_) {
    max_i = std::max(max_i, e.first);
    max_j = std::max(max_j, e.second);
  }
  std::vector<Rational> x_pow(max_i + 1, Rational(1));
  std::vector<Rational> y_pow(max_j + 1, Rational(1));
  for (int i = 1; i <= max_i; ++i) x_pow[i] = x_pow[i - 1] * x;
  for (int j = 1; j <= max_j; ++j) y_pow[j] = y_pow[j - 1] * y;
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * x_pow[e.first] * y_pow[e.second];
  return sum;
}

double BivariatePolynomial::EvaluateDouble(double x, double y) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    // 0^0 is 1 through std::pow.
    sum += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
  }
  return sum;
}

BivariatePolynomial BivariatePolynomial::Transpose() const {
  BivariatePolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponents{e.second, e.first}, c);
  return p;
}

namespace {

std::string MonomialText(int i, int j) {
  std::string text;
  auto factor = [&text](const char* var, int power) {
    if (power == 0) return;
    if (!text.empty()) text += "*";
    text += var;
    if (power > 1) text += "^" + std::to_string(power);
  };
  factor("x", i);
  factor("y", j);
  return text;
}

}  // namespace

std::string BivariatePolynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = MonomialText(e.first, e.second);
    if (mono.empty()) {
      out << RenderFraction(magnitude);
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << RenderFraction(magnitude) << "*" << mono;
    }
  }
  return out.str();
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(c, e.first, e.second);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(
    const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(-c, e.first, e.second);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& l,
                              const BivariatePolynomial& r) {
  BivariatePolynomial product;
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      product.AddTerm(cl * cr, el.first + er.first, el.second + er.second);
    }
  }
  return product;
}

}  // namespace tuttecert
