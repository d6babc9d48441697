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

#include "tuttecert/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace tuttecert {
namespace {

BigInt PowerOfTen(unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void Malformed(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) +
                              "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Malformed(text);
    BigInt d(std::string(den), 10);
    if (d == 0) Malformed(text);
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!AllDigits(exp_text) || exp_text.size() > 6) Malformed(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      body = body.substr(0, e);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) Malformed(text);
    if (!int_part.empty() && !AllDigits(int_part)) Malformed(text);
    if (!frac_part.empty() && !AllDigits(frac_part)) Malformed(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt mantissa(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(mantissa * PowerOfTen(static_cast<unsigned>(exponent)));
    } else {
      result = Rational(mantissa, PowerOfTen(static_cast<unsigned>(-exponent)));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

std::string RenderSignificant(const Rational& value, int significant_digits) {
  if (significant_digits < 1) {
    throw std::invalid_argument("significant digits must be positive");
  }
  const int digits = significant_digits;
  if (value == 0) {
    return digits == 1 ? "0" : "0." + std::string(digits - 1, '0');
  }
  const bool negative = value < 0;
  const Rational magnitude = abs(value);

  // Decimal exponent e with 10^e <= magnitude < 10^(e+1).
  long e = 0;
  {
    long num_digits = static_cast<long>(mpz_sizeinbase(
        magnitude.get_num_mpz_t(), 10));
    long den_digits = static_cast<long>(mpz_sizeinbase(
        magnitude.get_den_mpz_t(), 10));
    e = num_digits - den_digits;
    auto ten_to = [](long k) {
      return k >= 0 ? Rational(PowerOfTen(static_cast<unsigned>(k)))
                    : Rational(BigInt(1), PowerOfTen(static_cast<unsigned>(-k)));
    };
    while (magnitude < ten_to(e)) --e;
    while (magnitude >= ten_to(e + 1)) ++e;
  }

  const long shift = digits - 1 - e;
  Rational scaled = magnitude;
  if (shift >= 0) {
    scaled *= PowerOfTen(static_cast<unsigned>(shift));
  } else {
    scaled /= PowerOfTen(static_cast<unsigned>(-shift));
  }
  BigInt integer = FloorOf(scaled);
  const Rational remainder = scaled - Rational(integer);
  const Rational half(1, 2);
  if (remainder > half || (remainder == half && mpz_odd_p(integer.get_mpz_t()))) {
    integer += 1;
  }
  if (integer == PowerOfTen(static_cast<unsigned>(digits))) {
    integer /= 10;
    ++e;
  }

  std::string body = integer.get_str();
  std::string out;
  if (e >= 0) {
    const auto int_len = static_cast<size_t>(e + 1);
    if (int_len >= body.size()) {
      out = body + std::string(int_len - body.size(), '0');
    } else {
      out = body.substr(0, int_len) + "." + body.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + body;
  }
  return negative ? "-" + out : out;
}

std::string RenderFraction(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

Rational Power(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

BigInt Factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt FloorOf(const Rational& value) {
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

BigInt CeilOf(const Rational& value) {
  BigInt result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

}  // namespace tuttecert
