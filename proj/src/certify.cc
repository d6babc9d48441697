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

#include "tuttecert/certify.h"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <sstream>

#include "tuttecert/tutte.h"

namespace tuttecert {

namespace {

using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

CertValue MakeValue(const Rational& v) { return {RenderFraction(v), v}; }
CertValue MakeValue(const QuadraticNumber& v) {
  return {v.ToString(), v.Approximate(80)};
}
CertValue MakeValue(int v) { return MakeValue(Rational(v)); }

std::string Describe(const Rational& v) {
  return RenderFraction(v) + " (" + RenderSignificant(v, 15) + ")";
}
std::string Describe(const QuadraticNumber& v) {
  return v.ToString() + " (" + RenderSignificant(v.Approximate(80), 15) + ")";
}

template <typename T>
CertificateReport CertifyIdeaImpl(int idea, const T& x, const T& s, int d0) {
  if (idea < 1 || idea > 4) throw std::invalid_argument("idea must be 1, 2, 3 or 4");
  if (!(x > T(1))) throw DomainError("x must exceed 1");
  if (!(s > T(0) && s < T(1))) throw DomainError("s must lie in (0, 1)");
  if (d0 < 3) throw std::invalid_argument("d0 must be >= 3");

  CertificateReport report;
  report.title = "Idea " + std::to_string(idea);
  report.parameters = {{"x", Describe(x)}, {"s", Describe(s)},
                       {"d0", std::to_string(d0)}};
  auto check = [&report](std::string name, std::string degree, const T& value,
                         bool pass, std::string note, bool in_table) {
    report.checks.push_back({std::move(name), std::move(degree),
                             MakeValue(value), pass, std::move(note), in_table});
  };

  check("x_at_least_2", "", x, x >= T(2),
        "the per-vertex lower bound is proved for x >= 2", false);
  if (idea >= 3) {
    const T star = (x * x * x + x * x + x) / T(16);
    check("star4_gluing", "", star, star > T(1),
          "(x^3+x^2+x)/16 > 1 rules out three leaves on one vertex", false);
  }

  const T gamma1 = Gamma(x, s, 1);
  const T gamma2 = Gamma(x, s, 2);
  const std::string g_name = "G(d,x,s,gamma(1))";
  const std::string g2_name = "G_2(d,x,s,gamma(1),gamma(2))";
  const std::string leaf_suffix = "*G(1,x,s,gamma(d))^min(2,d-1)";

  if (idea <= 2) {
    report.columns = {"d", g_name};
    const int first = idea == 1 ? 1 : 2;
    if (idea == 2) {
      const T value = GFn(1, x, s, gamma2);
      report.rows.push_back({"1*", {MakeValue(value)}, value >= T(1)});
      check("G_leaf", "1*", value, value >= T(1),
            "a leaf of a connected graph on >= 3 vertices has a neighbor of "
            "degree >= 2, so gamma(2) applies",
            true);
    }
    for (int d = first; d <= d0; ++d) {
      const T value = GFn(d, x, s, gamma1);
      report.rows.push_back({std::to_string(d), {MakeValue(value)}, value >= T(1)});
      check("G", std::to_string(d), value, value >= T(1), "", true);
    }
  } else {
    const std::string main_name = idea == 3 ? g_name : g2_name;
    report.columns = {"d", main_name, main_name + leaf_suffix};
    for (int d = 2; d <= d0; ++d) {
      const T main_value =
          idea == 3 ? GFn(d, x, s, gamma1) : G2Fn(d, x, s, gamma1, gamma2);
      const T leaf = GFn(1, x, s, Gamma(x, s, d));
      const T product =
          main_value * PowerBySquaring(leaf, static_cast<unsigned>(std::min(2, d - 1)));
      const bool pass = main_value >= T(1) && product >= T(1);
      report.rows.push_back(
          {std::to_string(d), {MakeValue(main_value), MakeValue(product)}, pass});
      check(idea == 3 ? "G" : "G2", std::to_string(d), main_value,
            main_value >= T(1), "", true);
      check("leaf_product", std::to_string(d), product, product >= T(1), "", true);
    }
  }

  // Tail: the first d <= d0 from which G(., x, s, gamma(1)) is non-increasing.
  std::optional<T> tail_margin;
  for (int d = 2; d <= d0; ++d) {
    T margin = TailMargin(d, x, gamma1);
    if (margin >= T(0)) {
      report.tail_degree = d;
      tail_margin = margin;
      break;
    }
  }
  if (report.tail_degree) {
    check("tail", std::to_string(*report.tail_degree), *tail_margin, true,
          "(x-1)/(x(d+2)) >= gamma(1)^(d-1): G(d',x,s,gamma(1)) is "
          "non-increasing for d' >= d, so every d' > d0 is bounded below by "
          "G(inf,x,s)",
          false);
  } else {
    check("tail", std::to_string(d0), TailMargin(d0, x, gamma1), false,
          "the tail condition holds for no d <= d0", false);
  }

  const T limit = GLimit(x, s);
  check("limit", "inf", limit, limit >= T(1),
        "G(inf,x,s) bounds the decreasing tail from below", idea <= 2);
  if (idea <= 2) {
    report.rows.push_back({"inf", {MakeValue(limit)}, limit >= T(1)});
  } else {
    const T leaf = GFn(1, x, s, Gamma(x, s, d0));
    const T product = limit * leaf * leaf;
    report.rows.push_back(
        {"inf", {MakeValue(limit), MakeValue(product)},
         limit >= T(1) && product >= T(1)});
    report.checks.back().in_table = true;
    check("limit_product", "inf", product, product >= T(1),
          "gamma(d) <= gamma(d0) for d > d0 makes the leaf factor at least "
          "G(1,x,s,gamma(d0))",
          true);
  }
  report.Finalize();
  return report;
}

}  // namespace

void CertificateReport::Finalize() {
  verdict = true;
  failing_reason.reset();
  for (const CertificateCheck& c : checks) {
    if (c.pass) continue;
    verdict = false;
    std::string reason = "first failing check: " + c.name;
    if (!c.degree.empty()) reason += " d=" + c.degree;
    reason += " value=" + RenderSignificant(c.value.approximation, 15);
    if (!c.note.empty()) reason += " (" + c.note + ")";
    failing_reason = reason;
    return;
  }
}

Rational PerVertexLowerBound(const BipartiteGraph& graph, const Rational& x,
                        const Rational& s) {
  if (x < 2) throw DomainError("the bound requires x >= 2");
  if (s < 0 || s > 1) throw DomainError("s must lie in [0, 1]");
  if (graph.HasIsolatedVertex()) {
    throw DomainError("the bound requires a graph without isolated vertices");
  }
  Rational product = 1;
  for (int v = 0; v < graph.a_size(); ++v) {
    product *= LeadFactor(graph.Degree(v), x, s);
  }
  for (int u = graph.a_size(); u < graph.vertex_count(); ++u) {
    Rational gammas = 1;
    for (int w : graph.Neighbors(u)) gammas *= Gamma(x, s, graph.Degree(w));
    product *= s - s / Rational(graph.Degree(u) + 1) * gammas;
  }
  return product;
}

int DefaultD0(int idea) {
  switch (idea) {
    case 1:
    case 2:
      return 11;
    case 3:
      return 44;
    case 4:
      return 100;
    default:
      throw std::invalid_argument("idea must be 1, 2, 3 or 4");
  }
}

CertificateReport CertifyIdea(int idea, const Rational& x, const Rational& s,
                              int d0) {
  return CertifyIdeaImpl(idea, x, s, d0);
}

CertificateReport CertifyIdea(int idea, const QuadraticNumber& x,
                              const QuadraticNumber& s, int d0) {
  return CertifyIdeaImpl(idea, x, s, d0);
}

namespace {

CertValue FloatValue(const Float256& v) {
  std::ostringstream out;
  out << std::setprecision(60) << std::scientific << v;
  return {out.str(), ParseRational(out.str())};
}

}  // namespace

CertificateReport CertifyCircuitInterval(const Rational& k) {
  if (k < 4) throw DomainError("the circuit interval needs k >= 4");
  const Rational k2 = k * k;
  const BigInt lo_big = CeilOf(k + 1);
  const BigInt hi_big = FloorOf(k2 * k2 - 2 * k2 - 1);
  if (hi_big - lo_big > 10000000) {
    throw ResourceError("degree interval exceeds 10^7 values");
  }
  const int lo = static_cast<int>(lo_big.get_si());
  const int hi = static_cast<int>(hi_big.get_si());
  const Rational s = 1 - 1 / k2;

  CertificateReport report;
  report.title = "Circuit interval";
  report.parameters = {{"k", Describe(k)},
                       {"s", Describe(s)},
                       {"interval", "[" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]"}};
  const bool exact = k <= 6;
  report.parameters.push_back(
      {"arithmetic", exact ? "exact rational" : "256-bit binary, margin 1e-20"});

  int worst_d = lo;
  std::optional<int> first_failure;
  CertValue lo_value;
  CertValue hi_value;
  CertValue worst_value;
  if (exact) {
    Rational s_pow = Power(s, static_cast<unsigned>(lo));
    Rational worst;
    for (int d = lo; d <= hi; ++d) {
      const Rational g = LeadFactor(d, Rational(2), s) * (s - s * s_pow / (d + 1));
      if (d == lo || g < worst) {
        worst = g;
        worst_d = d;
      }
      if (g < 1 && !first_failure) first_failure = d;
      if (d == lo) lo_value = MakeValue(g);
      if (d == hi) hi_value = MakeValue(g);
      s_pow *= s;
    }
    worst_value = MakeValue(worst);
  } else {
    const Float256 sf = Float256(s.get_num().get_str()) / Float256(s.get_den().get_str());
    const Float256 threshold = 1 + Float256("1e-20");
    Float256 s_pow = boost::multiprecision::pow(sf, lo);
    Float256 worst;
    for (int d = lo; d <= hi; ++d) {
      const Float256 g = ((d + 2) * sf / (d + 1) + 2 * (1 - sf)) *
                         (sf - sf * s_pow / (d + 1));
      if (d == lo || g < worst) {
        worst = g;
        worst_d = d;
      }
      if (g < threshold && !first_failure) first_failure = d;
      if (d == lo) lo_value = FloatValue(g);
      if (d == hi) hi_value = FloatValue(g);
      s_pow *= sf;
    }
    worst_value = FloatValue(worst);
  }
  auto at_least_one = [&](const CertValue& v) {
    return exact ? v.approximation >= 1
                 : v.approximation >= 1 + Rational(1, 100000000) / 1000000000000;
  };
  const std::string g = "G(d,2,s,s)";
  report.checks.push_back({"interval_lower", std::to_string(lo), lo_value,
                           at_least_one(lo_value), g, false});
  report.checks.push_back({"interval_upper", std::to_string(hi), hi_value,
                           at_least_one(hi_value), g, false});
  report.checks.push_back({"interval_minimum", std::to_string(worst_d), worst_value,
                           at_least_one(worst_value), "smallest " + g, false});
  report.checks.push_back(
      {"sweep", first_failure ? std::to_string(*first_failure) : "",
       MakeValue(hi - lo + 1), !first_failure,
       first_failure ? "first degree with " + g + " below 1"
                     : std::to_string(hi - lo + 1) + " degrees checked",
       false});
  report.Finalize();
  return report;
}

DegreeScanResult DegreeIntervalScan(const Rational& s, int delta) {
  if (!(s > 0 && s < 1)) throw DomainError("s must lie in (0, 1)");
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  const Rational x = 2;
  const Rational gamma = Gamma(x, s, delta);
  Rational gamma_pow = Power(gamma, static_cast<unsigned>(delta));
  constexpr int kLimit = 20000;
  DegreeScanResult result;
  for (int d = delta; d <= delta + kLimit; ++d) {
    const Rational g = LeadFactor(d, x, s) * (s - s * gamma_pow / (d + 1));
    if (!(g > 1)) {
      result.d_max = d - 1;
      result.immediate_failure = d == delta;
      return result;
    }
    gamma_pow *= gamma;
  }
  throw ResourceError("degree scan did not terminate within 20000 degrees");
}

CertificateReport CertifyCircuitLengthCriterion(const Matroid& m, int ell) {
  if (ell < 6) throw std::invalid_argument("ell must be >= 6");
  const int upper = (ell - 2) * (ell - 2) * (ell - 2) * (ell - 2);
  CertificateReport report;
  report.title = "Circuit-length criterion";
  report.parameters = {{"matroid", m.descriptor()},
                       {"ell", std::to_string(ell)},
                       {"allowed lengths", "[" + std::to_string(ell) + ", " +
                                               std::to_string(upper) + "]"}};
  auto circuit_text = [](ElementSet c) {
    std::string text = "{";
    for (int e : Elements(c)) text += (text.size() > 1 ? "," : "") + std::to_string(e);
    return text + "}";
  };
  bool hypotheses = true;
  const std::pair<const char*, Matroid> sides[] = {{"M", m}, {"dual", Dual(m)}};
  for (const auto& [side, matroid] : sides) {
    const std::vector<ElementSet> circuits = Circuits(matroid);
    std::optional<ElementSet> shortest;
    std::optional<ElementSet> longest;
    for (ElementSet c : circuits) {
      if (!shortest || Cardinality(c) < Cardinality(*shortest)) shortest = c;
      if (!longest || Cardinality(c) > Cardinality(*longest)) longest = c;
    }
    const std::string name = std::string("circuits_") + side;
    if (!shortest) {
      report.checks.push_back({name, "", MakeValue(0), true, "no circuits", false});
      continue;
    }
    const int min_len = Cardinality(*shortest);
    const int max_len = Cardinality(*longest);
    const bool low_ok = min_len >= ell;
    const bool high_ok = max_len <= upper;
    hypotheses = hypotheses && low_ok && high_ok;
    report.checks.push_back(
        {name + "_min_length", "", MakeValue(min_len), low_ok,
         std::to_string(circuits.size()) + " circuits; shortest " +
             circuit_text(*shortest),
         false});
    report.checks.push_back({name + "_max_length", "", MakeValue(max_len),
                             high_ok, "longest " + circuit_text(*longest), false});
  }
  if (m.ground_size() <= 20) {
    const BivariatePolynomial t = TutteMatroid(m);
    const Rational bases = t.Evaluate(1, 1);
    const Rational margin = t.Evaluate(2, 0) * t.Evaluate(0, 2) - bases * bases;
    report.checks.push_back({"tutte_product_margin", "", MakeValue(margin),
                             margin >= 0, "T(2,0)*T(0,2) - T(1,1)^2", false});
  }
  report.parameters.push_back(
      {"hypotheses", hypotheses ? "verified; the circuit-length criterion applies"
                                : "violated"});
  report.Finalize();
  return report;
}

namespace {

std::string Pad(const std::string& text, size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string RenderTable(const CertificateReport& report, int precision) {
  std::ostringstream out;
  out << report.title << "\n";
  for (const auto& [name, value] : report.parameters) {
    out << "  " << name << " = " << value << "\n";
  }
  if (!report.columns.empty()) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(report.columns);
    for (const CertificateRow& row : report.rows) {
      std::vector<std::string> line = {row.label};
      for (const CertValue& v : row.values) {
        line.push_back(RenderSignificant(v.approximation, precision));
      }
      cells.push_back(std::move(line));
    }
    std::vector<size_t> widths(report.columns.size(), 0);
    for (const auto& line : cells) {
      for (size_t c = 0; c < line.size(); ++c) {
        widths[c] = std::max(widths[c], line[c].size());
      }
    }
    out << "\n";
    for (const auto& line : cells) {
      std::string text;
      for (size_t c = 0; c < line.size(); ++c) {
        text += c + 1 == line.size() ? line[c] : Pad(line[c], widths[c] + 2);
      }
      out << text << "\n";
    }
    out << "\n";
  }
  for (const CertificateCheck& c : report.checks) {
    if (c.in_table) continue;
    out << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.degree.empty()) out << " d=" << c.degree;
    out << ": " << RenderSignificant(c.value.approximation, precision);
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  if (report.failing_reason) out << *report.failing_reason << "\n";
  out << "VERDICT " << (report.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string RenderCsv(const CertificateReport& report, int precision) {
  std::ostringstream out;
  if (report.columns.empty()) {
    out << "name,d,value,exact,verdict\n";
    for (const CertificateCheck& c : report.checks) {
      out << CsvField(c.name) << "," << c.degree << ","
          << RenderSignificant(c.value.approximation, precision) << ","
          << CsvField(c.value.exact) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    return out.str();
  }
  for (size_t c = 0; c < report.columns.size(); ++c) {
    out << (c ? "," : "") << CsvField(report.columns[c]);
  }
  out << "\n";
  for (const CertificateRow& row : report.rows) {
    out << row.label;
    for (const CertValue& v : row.values) {
      out << "," << RenderSignificant(v.approximation, precision);
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderCertificate(const CertificateReport& report) {
  std::ostringstream out;
  for (const CertificateCheck& c : report.checks) {
    out << "CHECK " << c.name << " d=" << (c.degree.empty() ? "-" : c.degree)
        << " value=" << c.value.exact << " verdict=" << (c.pass ? "PASS" : "FAIL")
        << "\n";
  }
  out << "VERDICT " << (report.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace tuttecert
