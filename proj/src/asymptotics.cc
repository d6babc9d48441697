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

#include "tuttecert/asymptotics.h"

#include <cmath>
#include <stdexcept>

#include "tuttecert/errors.h"
#include "tuttecert/graphs.h"
#include "tuttecert/perm_tutte.h"

namespace tuttecert {

MaximizeResult MaximizeUnimodal(const std::function<double(double)>& f,
                                double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("need lo < hi");
  if (!(tol > 0)) throw std::invalid_argument("need tol > 0");
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 200 && b - a > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  MaximizeResult best{(a + b) / 2, f((a + b) / 2)};
  for (double edge : {lo, hi}) {
    const double value = f(edge);
    if (value > best.value) best = {edge, value};
  }
  return best;
}

GrowthResult GrowthKab(double alpha, double x) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("alpha must lie in (0, 1)");
  if (!(x > 1)) throw DomainError("x must exceed 1");
  const double beta = 1 - alpha;
  GrowthResult result;
  if (beta < (x - 1) / x) {
    result.maximizer = beta * x / (x - 1);
    result.value = std::pow(alpha, alpha) * std::pow(beta, beta) * x /
                   std::pow(x - 1, beta);
    result.branch = "interior: beta < (x-1)/x";
  } else {
    result.maximizer = 1;
    result.value = 1;
    result.branch = "boundary: beta >= (x-1)/x";
  }
  const MaximizeResult numeric = MaximizeUnimodal(
      [&](double s) { return std::pow(s, beta) * std::pow(s + x * (1 - s), alpha); },
      0, 1);
  result.residual = std::abs(numeric.value - result.value);
  return result;
}

GrowthResult GrowthHnnn(double x, HnnnSide side) {
  if (!(x > 1)) throw DomainError("x must exceed 1");
  const double root27 = 3 * std::sqrt(3.0);
  GrowthResult result;
  std::function<double(double)> objective;
  if (side == HnnnSide::kX0) {
    objective = [x](double s) {
      return (s + x * (1 - s)) * (x * s + (1 - x) * s * s / 2);
    };
    if (x >= std::sqrt(3.0)) {
      result.value = x * x * x / (root27 * (x - 1));
      result.maximizer = x * (1 - 1 / std::sqrt(3.0)) / (x - 1);
      result.branch = "x >= sqrt(3)";
    } else {
      result.value = (x + 1) / 2;
      result.maximizer = 1;
      result.branch = "1 < x < sqrt(3)";
    }
  } else {
    objective = [x](double t) {
      return t * (t * t / 2 + (0.5 - t * t / 2) * x);
    };
    if (x >= 1.5) {
      result.value = std::pow(x, 1.5) / (root27 * std::sqrt(x - 1));
      result.maximizer = std::sqrt(x / (3 * (x - 1)));
      result.branch = "x >= 3/2";
    } else {
      result.value = 0.5;
      result.maximizer = 1;
      result.branch = "1 < x < 3/2";
    }
  }
  const MaximizeResult numeric = MaximizeUnimodal(objective, 0, 1);
  result.residual = std::abs(numeric.value - result.value);
  if (result.residual > 1e-8) {
    throw std::logic_error("closed form disagrees with numeric maximization");
  }
  return result;
}

double GrowthHnnnProduct(double x) {
  return GrowthHnnn(x, HnnnSide::kX0).value * GrowthHnnn(x, HnnnSide::k0X).value;
}

double X0Root() {
  double x = 2.3;
  for (int i = 0; i < 100; ++i) {
    const double step = (x * x * x - 9 * x + 9) / (3 * x * x - 9);
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return x;
}

ProbeReport CounterexampleProbe(int n, const Rational& x, std::int64_t samples,
                                std::uint64_t seed, int workers) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(x > 1)) throw DomainError("x must exceed 1");
  ProbeReport report;
  report.n = n;
  report.x = x;
  const BipartiteGraph graph = Habc(n, n, n);
  const double xd = x.get_d();
  if (graph.vertex_count() <= 11) {
    const BivariatePolynomial p = PermTutteExact(graph);
    report.exact = true;
    report.value_x0 = p.Evaluate(x, 0);
    report.value_0x = p.Evaluate(0, x);
    report.exact_product = *report.value_x0 * *report.value_0x;
    report.product = report.exact_product->get_d();
  } else {
    McOptions options;
    options.workers = workers;
    options.integrate_leaves = true;
    report.estimate_x0 = PermTutteMc(graph, xd, 0, samples, seed, options);
    report.estimate_0x = PermTutteMc(graph, 0, xd, samples, seed, options);
    const McEstimate& a = *report.estimate_x0;
    const McEstimate& b = *report.estimate_0x;
    report.product = a.mean * b.mean;
    if (a.mean > 0 && b.mean > 0) {
      report.log_rate_stderr =
          std::hypot(a.std_error / a.mean, b.std_error / b.mean) / n;
    }
  }
  report.log_rate = std::log(report.product) / n;
  report.limit_rate = std::log(GrowthHnnnProduct(xd));
  return report;
}

}  // namespace tuttecert
