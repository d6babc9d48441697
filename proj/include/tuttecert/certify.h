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

#ifndef TUTTECERT_CERTIFY_H_
#define TUTTECERT_CERTIFY_H_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tuttecert/errors.h"
#include "tuttecert/graphs.h"
#include "tuttecert/matroid.h"
#include "tuttecert/quadratic_field.h"
#include "tuttecert/rational.h"

namespace tuttecert {

// The kernel functions below are templates over the exact field in use:
// Rational or QuadraticNumber.

// gamma_{x,s}(d) = (d+x)s / ((d+x)s + (d+1)x(1-s)).
template <typename T>
T Gamma(const T& x, const T& s, int d) {
  if (s < T(0) || s > T(1)) throw DomainError("s must lie in [0, 1]");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const T top = (T(d) + x) * s;
  const T bottom = top + T(d + 1) * x * (T(1) - s);
  if (bottom == T(0)) throw DomainError("gamma is undefined for x = 0, s = 0");
  return top / bottom;
}

// The leading factor (d+x)s/(d+1) + x(1-s).
template <typename T>
T LeadFactor(int d, const T& x, const T& s) {
  return (T(d) + x) * s / T(d + 1) + x * (T(1) - s);
}

// G(d,x,s,gamma) = ((d+x)s/(d+1) + x(1-s)) (s - s gamma^d / (d+1)).
template <typename T>
T GFn(int d, const T& x, const T& s, const T& gamma) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return LeadFactor(d, x, s) *
         (s - s * PowerBySquaring(gamma, static_cast<unsigned>(d)) / T(d + 1));
}

// G(inf,x,s) = (s + x(1-s)) s.
template <typename T>
T GLimit(const T& x, const T& s) {
  if (s < T(0) || s > T(1)) throw DomainError("s must lie in [0, 1]");
  return (s + x * (T(1) - s)) * s;
}

// G_2 uses gamma1^min(2,d-1) gamma2^(d-min(2,d-1)) in place of gamma^d.
template <typename T>
T G2Fn(int d, const T& x, const T& s, const T& gamma1, const T& gamma2) {
  if (d < 2) throw DomainError("G_2 is used for d >= 2 only");
  const unsigned low = static_cast<unsigned>(std::min(2, d - 1));
  const T mixed = PowerBySquaring(gamma1, low) *
                  PowerBySquaring(gamma2, static_cast<unsigned>(d) - low);
  return LeadFactor(d, x, s) * (s - s * mixed / T(d + 1));
}

// (x-1)/(x(d+2)) - gamma^(d-1). Non-negative exactly when G(d',x,s,gamma) is
// non-increasing for all d' >= d.
template <typename T>
T TailMargin(int d, const T& x, const T& gamma) {
  if (d < 2) throw std::invalid_argument("tail condition needs d >= 2");
  if (!(gamma > T(0) && gamma < T(1))) {
    throw DomainError("tail condition needs gamma in (0, 1)");
  }
  if (!(x > T(1))) throw DomainError("tail condition needs x > 1");
  return (x - T(1)) / (x * T(d + 2)) -
         PowerBySquaring(gamma, static_cast<unsigned>(d - 1));
}

template <typename T>
bool TailCondition(int d, const T& x, const T& gamma) {
  return TailMargin(d, x, gamma) >= T(0);
}

// prod_A ((d+x)s/(d+1) + x(1-s)) * prod_B (s - s/(d+1) prod_{w in N(u)}
// gamma(d_w)), a lower bound for the permutation Tutte polynomial at (x, 0).
// Requires x >= 2, 0 <= s <= 1 and no isolated vertex (DomainError).
Rational PerVertexLowerBound(const BipartiteGraph& graph, const Rational& x,
                        const Rational& s);

// One value in a certificate: its exact text and a rational from which the
// decimal rendering is taken (exact for rationals, 80 correct digits for
// elements of Q(sqrt 5)).
struct CertValue {
  std::string exact;
  Rational approximation;
};

struct CertificateCheck {
  std::string name;
  std::string degree;  // "1*", "7", "inf", or empty for global checks
  CertValue value;
  bool pass = false;
  std::string note;
  // Already shown as a table cell, so RenderTable does not list it again.
  bool in_table = false;
};

struct CertificateRow {
  std::string label;
  std::vector<CertValue> values;
  bool pass = false;
};

struct CertificateReport {
  std::string title;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;  // first column is "d"
  std::vector<CertificateRow> rows;
  std::vector<CertificateCheck> checks;
  std::optional<int> tail_degree;
  bool verdict = false;
  std::optional<std::string> failing_reason;

  // Sets verdict and failing_reason from the checks.
  void Finalize();
};

int DefaultD0(int idea);

// Runs the check set of idea 1, 2, 3 or 4. Requires x > 1 and 0 < s < 1
// (DomainError) and d0 >= 3 (std::invalid_argument). A tail condition that
// never holds up to d0 makes the verdict FAIL.
CertificateReport CertifyIdea(int idea, const Rational& x, const Rational& s,
                              int d0);
CertificateReport CertifyIdea(int idea, const QuadraticNumber& x,
                              const QuadraticNumber& s, int d0);

// With s = 1 - 1/k^2, checks G(d,2,s,s) >= 1 for every integer d in
// [ceil(k+1), floor(k^4 - 2k^2 - 1)]. Exact for k <= 6; above that, 256-bit
// binary floating point with the pass margin G >= 1 + 10^-20. Requires k >= 4.
CertificateReport CertifyCircuitInterval(const Rational& k);

struct DegreeScanResult {
  int d_max = 0;
  bool immediate_failure = false;
};

// Largest D with G(d,2,s,gamma_{2,s}(delta)) > 1 for all delta <= d <= D.
DegreeScanResult DegreeIntervalScan(const Rational& s, int delta);

// Checks that every circuit of m and of its dual has length in
// [ell, (ell-2)^4] and, when the ground set has at most 20 elements, evaluates
// T(2,0) T(0,2) - T(1,1)^2 exactly. Requires ell >= 6.
CertificateReport CertifyCircuitLengthCriterion(const Matroid& m, int ell);

// Human table: a header, one line per row, then tail/limit notes and verdict.
std::string RenderTable(const CertificateReport& report, int precision);
std::string RenderCsv(const CertificateReport& report, int precision);
// One "CHECK <name> d=<d> value=<exact> verdict=PASS|FAIL" line per check,
// then "VERDICT PASS|FAIL".
std::string RenderCertificate(const CertificateReport& report);

}  // namespace tuttecert

#endif  // TUTTECERT_CERTIFY_H_
