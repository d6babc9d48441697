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

#include "tuttecert/cli.h"

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tuttecert/asymptotics.h"
#include "tuttecert/certify.h"
#include "tuttecert/errors.h"
#include "tuttecert/graphs.h"
#include "tuttecert/io.h"
#include "tuttecert/matroid.h"
#include "tuttecert/monte_carlo.h"
#include "tuttecert/perm_tutte.h"
#include "tuttecert/quadratic_field.h"
#include "tuttecert/rational.h"
#include "tuttecert/tutte.h"

namespace tuttecert {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool IsGoldenToken(const std::string& text) {
  return text == "golden1" || text == "golden_s";
}

QuadraticNumber ParseFieldNumber(const std::string& text) {
  if (text == "golden1") return QuadraticNumber::GoldenSquare();
  if (text == "golden_s") return QuadraticNumber::GoldenS();
  return QuadraticNumber(ParseRational(text));
}

Rational ParseParameter(const std::string& name, const std::string& text) {
  if (IsGoldenToken(text)) {
    throw InputError("parameter --" + name + ": '" + text +
                     "' is only accepted by certify idea and growth");
  }
  try {
    return ParseRational(text);
  } catch (const std::invalid_argument&) {
    throw InputError("parameter --" + name + ": '" + text +
                     "' is not a decimal or p/q rational");
  }
}

double ParseReal(const std::string& name, const std::string& text) {
  if (IsGoldenToken(text)) return ParseFieldNumber(text).ToDouble();
  return ParseParameter(name, text).get_d();
}

std::vector<int> ParseCounts(const std::string& field, const std::string& text,
                             size_t expected) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(field + ": '" + item + "' is not an integer");
    }
  }
  if (values.size() != expected) {
    throw InputError(field + ": expected " + std::to_string(expected) +
                     " comma-separated integers");
  }
  return values;
}

// "complete:a,b", "star:k" (leaves in A), "star-center-a:k", "habc:a,b,c".
BipartiteGraph ParseFamily(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InputError("--family: expected <name>:<sizes>");
  }
  const std::string name = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  try {
    if (name == "complete") {
      const auto v = ParseCounts("--family", args, 2);
      return CompleteBipartite(v[0], v[1]);
    }
    if (name == "star") return Star(ParseCounts("--family", args, 1)[0], true);
    if (name == "star-center-a") {
      return Star(ParseCounts("--family", args, 1)[0], false);
    }
    if (name == "habc") {
      const auto v = ParseCounts("--family", args, 3);
      return Habc(v[0], v[1], v[2]);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--family: ") + e.what());
  }
  throw InputError("--family: unknown family '" + name +
                   "' (complete, star, star-center-a, habc)");
}

BipartiteGraph GraphFromOptions(const std::string& graph_path,
                                const std::string& family) {
  if (!graph_path.empty() && !family.empty()) {
    throw InputError("give either --graph or --family, not both");
  }
  if (!graph_path.empty()) return LoadBipartiteGraph(graph_path);
  if (!family.empty()) return ParseFamily(family);
  throw InputError("one of --graph or --family is required");
}

json ReportToJson(const CertificateReport& report, int precision) {
  json doc;
  doc["title"] = report.title;
  doc["parameters"] = json::object();
  for (const auto& [name, value] : report.parameters) doc["parameters"][name] = value;
  doc["columns"] = report.columns;
  doc["rows"] = json::array();
  for (const CertificateRow& row : report.rows) {
    json values = json::array();
    for (const CertValue& v : row.values) {
      values.push_back(RenderSignificant(v.approximation, precision));
    }
    doc["rows"].push_back({{"d", row.label}, {"values", values}, {"pass", row.pass}});
  }
  doc["checks"] = json::array();
  for (const CertificateCheck& c : report.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"d", c.degree},
                             {"value", RenderSignificant(c.value.approximation, precision)},
                             {"exact", c.value.exact},
                             {"pass", c.pass},
                             {"note", c.note}});
  }
  doc["tail_degree"] = report.tail_degree ? json(*report.tail_degree) : json(nullptr);
  doc["verdict"] = report.verdict ? "PASS" : "FAIL";
  doc["failing_reason"] =
      report.failing_reason ? json(*report.failing_reason) : json(nullptr);
  return doc;
}

struct ReportOptions {
  std::string format = "table";
  int precision = 15;
  std::string cert_out;
};

void AddReportOptions(CLI::App* command, ReportOptions& options) {
  command->add_option("--format", options.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  command->add_option("--precision", options.precision, "significant digits")
      ->check(CLI::Range(1, 60));
  command->add_option("--cert-out", options.cert_out,
                      "write the line-per-check certificate to this file");
}

int EmitReport(const CertificateReport& report, const ReportOptions& options,
               std::ostream& out) {
  if (options.format == "json") {
    out << ReportToJson(report, options.precision).dump(2) << "\n";
  } else if (options.format == "csv") {
    out << RenderCsv(report, options.precision);
  } else {
    out << RenderTable(report, options.precision);
  }
  if (!options.cert_out.empty()) {
    std::ofstream file(options.cert_out);
    if (!file) throw InputError("--cert-out: cannot write '" + options.cert_out + "'");
    file << RenderCertificate(report);
  }
  return report.verdict ? kPass : kFail;
}

std::string Decimal(const Rational& value) {
  return RenderFraction(value) + " (" + RenderSignificant(value, 15) + ")";
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte and permutation Tutte polynomials with exact certificates"};
  app.require_subcommand(1);
  std::function<int()> action;

  // perm-tutte
  std::string graph_path;
  std::string family;
  std::string x_text;
  std::string y_text;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 1;
  int workers = 0;
  auto* perm = app.add_subcommand("perm-tutte", "permutation Tutte polynomial");
  perm->require_subcommand(1);
  auto* perm_exact = perm->add_subcommand("exact", "exact polynomial (<= 11 vertices)");
  auto* perm_mc = perm->add_subcommand("mc", "Monte Carlo estimate at (x, y)");
  for (auto* command : {perm_exact, perm_mc}) {
    command->add_option("--graph", graph_path, "bipartite graph JSON file");
    command->add_option("--family", family,
                        "complete:a,b | star:k | star-center-a:k | habc:a,b,c");
  }
  perm_exact->add_option("--x", x_text, "also evaluate at this x");
  perm_exact->add_option("--y", y_text, "also evaluate at this y");
  perm_mc->add_option("--x", x_text)->required();
  perm_mc->add_option("--y", y_text)->required();
  perm_mc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  perm_mc->add_option("--seed", seed);
  perm_mc->add_option("--workers", workers, "0 uses MW_THREADS or all cores");
  perm_exact->callback([&] {
    action = [&] {
      const BivariatePolynomial p =
          PermTutteExact(GraphFromOptions(graph_path, family));
      out << p.ToString() << "\n";
      if (!x_text.empty() || !y_text.empty()) {
        if (x_text.empty() || y_text.empty()) {
          throw InputError("--x and --y must be given together");
        }
        out << "value = "
            << Decimal(p.Evaluate(ParseParameter("x", x_text),
                                  ParseParameter("y", y_text)))
            << "\n";
      }
      return kPass;
    };
  });
  perm_mc->callback([&] {
    action = [&] {
      const BipartiteGraph graph = GraphFromOptions(graph_path, family);
      const double x = ParseParameter("x", x_text).get_d();
      const double y = ParseParameter("y", y_text).get_d();
      McOptions options;
      options.workers = workers;
      const McEstimate e = PermTutteMc(graph, x, y, samples, seed, options);
      nlohmann::ordered_json doc = {{"mean", e.mean}, {"stderr", e.std_error},
                  {"samples", e.samples}, {"seed", e.seed}};
      out << doc.dump() << "\n";
      return kPass;
    };
  });

  // tutte
  std::string method = "deletion-contraction";
  std::string matroid_text;
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  tutte->require_subcommand(1);
  auto* tutte_graph = tutte->add_subcommand("graph", "Tutte polynomial of a multigraph");
  tutte_graph->add_option("--graph", graph_path, "multigraph JSON file")->required();
  tutte_graph->add_option("--method", method)
      ->check(CLI::IsMember({"deletion-contraction", "matroid", "activities"}));
  tutte_graph->callback([&] {
    action = [&] {
      const MultiGraph graph = LoadMultiGraph(graph_path);
      BivariatePolynomial p;
      if (method == "matroid") {
        p = TutteMatroid(CycleMatroid(graph));
      } else if (method == "activities") {
        p = TutteByActivities(graph);
      } else {
        p = TutteDeletionContraction(graph);
      }
      out << p.ToString() << "\n";
      return kPass;
    };
  });
  auto* tutte_matroid = tutte->add_subcommand("matroid", "Tutte polynomial of a matroid");
  tutte_matroid->add_option("--matroid", matroid_text,
                            "uniform:m,n | graphic:<file> | dual(..) | double(..) | sum(..,..)")
      ->required();
  tutte_matroid->callback([&] {
    action = [&] {
      out << TutteMatroid(ParseMatroid(matroid_text)).ToString() << "\n";
      return kPass;
    };
  });

  // verify-transfer
  auto* transfer = app.add_subcommand(
      "verify-transfer", "compare T_G with the sum over spanning trees of T~_{H[T]}");
  transfer->add_option("--graph", graph_path, "multigraph JSON file")->required();
  transfer->callback([&] {
    action = [&] {
      const TransferReport report = VerifyTransferIdentity(LoadMultiGraph(graph_path));
      out << "spanning trees: " << report.tree_count << "\n";
      out << "T_G           = " << report.tutte.ToString() << "\n";
      out << "sum T~_{H[T]} = " << report.exchange_sum.ToString() << "\n";
      out << "difference    = " << report.difference.ToString() << "\n";
      out << (report.holds ? "identity holds" : "identity fails") << "\n";
      return report.holds ? kPass : kFail;
    };
  });

  // certify
  ReportOptions report_options;
  int idea = 4;
  std::optional<int> d0;
  std::string s_text;
  std::string k_text;
  int delta = 3;
  int ell = 6;
  auto* certify = app.add_subcommand("certify", "exact inequality certificates");
  certify->require_subcommand(1);
  auto* cert_idea = certify->add_subcommand("idea", "per-degree certificate of ideas 1-4");
  cert_idea->add_option("--idea", idea)->check(CLI::Range(1, 4));
  cert_idea->add_option("--x", x_text, "decimal, p/q or golden1")->required();
  cert_idea->add_option("--s", s_text, "decimal, p/q or golden_s")->required();
  cert_idea->add_option("--d0", d0, "last explicitly checked degree");
  AddReportOptions(cert_idea, report_options);
  cert_idea->callback([&] {
    action = [&] {
      const int last = d0 ? *d0 : DefaultD0(idea);
      CertificateReport report;
      if (IsGoldenToken(x_text) || IsGoldenToken(s_text)) {
        report = CertifyIdea(idea, ParseFieldNumber(x_text),
                             ParseFieldNumber(s_text), last);
      } else {
        report = CertifyIdea(idea, ParseParameter("x", x_text),
                             ParseParameter("s", s_text), last);
      }
      return EmitReport(report, report_options, out);
    };
  });
  auto* cert_interval =
      certify->add_subcommand("circuit-interval", "degree interval [k+1, k^4-2k^2-1]");
  cert_interval->add_option("--k", k_text)->required();
  AddReportOptions(cert_interval, report_options);
  cert_interval->callback([&] {
    action = [&] {
      return EmitReport(CertifyCircuitInterval(ParseParameter("k", k_text)),
                        report_options, out);
    };
  });
  auto* cert_scan = certify->add_subcommand("degree-scan", "largest certified degree");
  cert_scan->add_option("--s", s_text)->required();
  cert_scan->add_option("--delta", delta)->check(CLI::PositiveNumber);
  cert_scan->callback([&] {
    action = [&] {
      const DegreeScanResult result =
          DegreeIntervalScan(ParseParameter("s", s_text), delta);
      out << "interval = [" << delta << ", " << result.d_max << "]\n";
      out << "d_max = " << result.d_max << "\n";
      if (result.immediate_failure) {
        out << "immediate failure at d = " << delta << "\n";
        return kFail;
      }
      return kPass;
    };
  });
  auto* cert_matroid =
      certify->add_subcommand("matroid", "circuit-length hypotheses of a matroid");
  cert_matroid->add_option("--matroid", matroid_text)->required();
  cert_matroid->add_option("--ell", ell)->check(CLI::Range(6, 100));
  AddReportOptions(cert_matroid, report_options);
  cert_matroid->callback([&] {
    action = [&] {
      return EmitReport(CertifyCircuitLengthCriterion(ParseMatroid(matroid_text), ell),
                        report_options, out);
    };
  });

  // growth
  std::string growth_family = "hnnn";
  std::string alpha_text = "1/2";
  std::string side = "x0";
  auto* growth = app.add_subcommand("growth", "asymptotic growth constants");
  growth->add_option("--family", growth_family)
      ->check(CLI::IsMember({"kab", "hnnn", "x0"}));
  growth->add_option("--x", x_text);
  growth->add_option("--alpha", alpha_text);
  growth->add_option("--side", side)->check(CLI::IsMember({"x0", "0x", "product"}));
  growth->callback([&] {
    action = [&] {
      out.precision(15);
      if (growth_family == "x0") {
        const double root = X0Root();
        out << "x0 = " << root << "\n";
        out << "p(x0) = " << root * root * root - 9 * root + 9 << "\n";
        return kPass;
      }
      if (x_text.empty()) throw InputError("--x is required");
      const double x = ParseReal("x", x_text);
      if (growth_family == "hnnn" && side == "product") {
        out << "value = " << GrowthHnnnProduct(x) << "\n";
        return kPass;
      }
      const GrowthResult r =
          growth_family == "kab"
              ? GrowthKab(ParseReal("alpha", alpha_text), x)
              : GrowthHnnn(x, side == "0x" ? HnnnSide::k0X : HnnnSide::kX0);
      out << "value = " << r.value << "\n";
      out << "maximizer = " << r.maximizer << "\n";
      out << "branch = " << r.branch << "\n";
      out << "residual = " << r.residual << "\n";
      return kPass;
    };
  });

  // counterexample
  int n = 2;
  auto* probe = app.add_subcommand("counterexample", "T~(x,0) T~(0,x) on H_{n,n,n}");
  probe->add_option("--n", n)->check(CLI::PositiveNumber);
  probe->add_option("--x", x_text)->required();
  probe->add_option("--samples", samples)->check(CLI::PositiveNumber);
  probe->add_option("--seed", seed);
  probe->add_option("--workers", workers);
  probe->callback([&] {
    action = [&] {
      const ProbeReport r =
          CounterexampleProbe(n, ParseParameter("x", x_text), samples, seed, workers);
      out.precision(15);
      out << "n = " << r.n << ", x = " << RenderFraction(r.x) << "\n";
      if (r.exact) {
        out << "T~(x,0) = " << Decimal(*r.value_x0) << "\n";
        out << "T~(0,x) = " << Decimal(*r.value_0x) << "\n";
        out << "product = " << Decimal(*r.exact_product) << "\n";
      } else {
        out << "T~(x,0) ~ " << r.estimate_x0->mean << " +- "
            << r.estimate_x0->std_error << "\n";
        out << "T~(0,x) ~ " << r.estimate_0x->mean << " +- "
            << r.estimate_0x->std_error << "\n";
        out << "product ~ " << r.product << "\n";
        out << "samples = " << samples << ", seed = " << seed << "\n";
      }
      out << "log(product)/n = " << r.log_rate;
      if (!r.exact) out << " +- " << r.log_rate_stderr;
      out << "\n";
      out << "limit rate = " << r.limit_rate << "\n";
      return kPass;
    };
  });

  // conjecture-scan
  int min_degree = 2;
  int trials = 500;
  auto* scan = app.add_subcommand("conjecture-scan",
                                  "random search for T~(2,0) T~(0,2) < 1");
  scan->add_option("--min-degree", min_degree)->check(CLI::Range(1, 5));
  scan->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  scan->add_option("--seed", seed);
  scan->callback([&] {
    action = [&] {
      const auto violations = ConjectureScan(min_degree, trials, seed);
      out << "trials = " << trials << ", violations = " << violations.size() << "\n";
      for (const auto& v : violations) {
        out << BipartiteGraphToJson(v.graph) << " product=" << Decimal(v.product)
            << "\n";
      }
      return violations.empty() ? kPass : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!action) {
    err << "no command given\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace tuttecert
