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

#ifndef TUTTECERT_ASYMPTOTICS_H_
#define TUTTECERT_ASYMPTOTICS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tuttecert/monte_carlo.h"
#include "tuttecert/rational.h"

namespace tuttecert {

struct MaximizeResult {
  double arg = 0;
  double value = 0;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi], at most
// 200 iterations, stopping once the bracket is narrower than tol. The
// endpoints are compared against the interior result so that boundary maxima
// are found. Throws std::invalid_argument when lo >= hi or tol <= 0.
MaximizeResult MaximizeUnimodal(const std::function<double(double)>& f,
                                double lo, double hi, double tol = 1e-12);

struct GrowthResult {
  double value = 0;
  double maximizer = 0;
  std::string branch;
  // |closed form - numeric maximum|.
  double residual = 0;
};

// Growth constant of the K_{a,b} value at (x, 0) with a = alpha m,
// b = (1 - alpha) m: max over s in [0, 1] of s^beta (s + x(1-s))^alpha.
// Requires alpha in (0, 1) and x > 1 (DomainError).
GrowthResult GrowthKab(double alpha, double x);

enum class HnnnSide { kX0, k0X };

// Growth constant of H_{n,n,n} at (x, 0) or (0, x), from the piecewise closed
// form, re-derived by MaximizeUnimodal; throws std::logic_error if the two
// differ by more than 1e-8. Requires x > 1 (DomainError).
GrowthResult GrowthHnnn(double x, HnnnSide side);

// Product of the two H_{n,n,n} growth constants.
double GrowthHnnnProduct(double x);

// The largest root of x^3 - 9x + 9, by Newton iteration from 2.3.
double X0Root();

struct ProbeReport {
  int n = 0;
  Rational x;
  bool exact = false;
  // Exact values, when 3n <= 11.
  std::optional<Rational> value_x0;
  std::optional<Rational> value_0x;
  std::optional<Rational> exact_product;
  // Estimates otherwise, with pendant leaves integrated out.
  std::optional<McEstimate> estimate_x0;
  std::optional<McEstimate> estimate_0x;
  double product = 0;
  double log_rate = 0;         // log(product) / n
  double log_rate_stderr = 0;  // delta-method, zero for exact values
  double limit_rate = 0;       // log of the product growth constant
};

// Evaluates T(x,0) T(0,x) on H_{n,n,n}. Requires n >= 1 and x > 1.
ProbeReport CounterexampleProbe(int n, const Rational& x, std::int64_t samples,
                                std::uint64_t seed, int workers = 0);

}  // namespace tuttecert

#endif  // TUTTECERT_ASYMPTOTICS_H_
