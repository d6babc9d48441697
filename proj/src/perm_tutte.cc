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

#include "tuttecert/perm_tutte.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tuttecert/errors.h"
#include "tuttecert/matroid.h"
#include "tuttecert/tutte.h"

namespace tuttecert {

ActivityProfile Activities(const BipartiteGraph& graph,
                           const std::vector<int>& order) {
  const int n = graph.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must list every vertex once");
  }
  std::vector<int> position(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || position[order[k]] >= 0) {
      throw std::invalid_argument("order must be a permutation of the vertices");
    }
    position[order[k]] = k;
  }
  ActivityProfile profile;
  for (int v = 0; v < n; ++v) {
    bool active = true;
    for (int w : graph.Neighbors(v)) {
      if (position[w] > position[v]) active = false;
    }
    if (!active) continue;
    if (graph.InA(v)) {
      ++profile.ia;
    } else {
      ++profile.ea;
    }
  }
  return profile;
}

BivariatePolynomial PermTutteExact(const BipartiteGraph& graph) {
  const int n = graph.vertex_count();
  if (n > 11) {
    throw ResourceError("exact permutation Tutte polynomial is limited to 11 vertices");
  }
  const int a = graph.a_size();
  const int b = graph.b_size();
  const int width = (a + 1) * (b + 1);
  std::vector<std::uint32_t> neighbors(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : graph.Neighbors(v)) neighbors[v] |= 1u << w;
  }
  // counts[S][i * (b + 1) + j]: orderings of the placed set S (placed from
  // smallest upward) with i active A vertices and j active B vertices.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint64_t> counts(static_cast<size_t>(full + 1) * width, 0);
  counts[0] = 1;
  for (std::uint32_t s = 0; s < full; ++s) {
    const std::uint64_t* from = &counts[static_cast<size_t>(s) * width];
    if (std::all_of(from, from + width, [](std::uint64_t c) { return c == 0; })) {
      continue;
    }
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1u) continue;
      const bool active = (neighbors[v] & ~s) == 0;
      const int shift = !active ? 0 : graph.InA(v) ? b + 1 : 1;
      std::uint64_t* to = &counts[static_cast<size_t>(s | 1u << v) * width];
      for (int k = 0; k + shift < width; ++k) to[k + shift] += from[k];
    }
  }
  const Rational total(Factorial(n));
  BivariatePolynomial result;
  const std::uint64_t* last = &counts[static_cast<size_t>(full) * width];
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      const std::uint64_t c = last[i * (b + 1) + j];
      if (c == 0) continue;
      result.AddTerm(Rational(BigInt(static_cast<unsigned long>(c))) / total, i, j);
    }
  }
  return result;
}

BivariatePolynomial StarClosedForm(int k) {
  if (k < 2) throw std::invalid_argument("star needs k >= 2");
  BivariatePolynomial p;
  for (int i = 1; i < k; ++i) p.AddTerm(Rational(1, k), i, 0);
  p.AddTerm(Rational(1, k), 0, 1);
  return p;
}

Rational FkgLowerBound(const BipartiteGraph& graph, const Rational& x,
                       const Rational& y) {
  const bool first = x >= 0 && x <= 1 && y >= 1;
  const bool second = y >= 0 && y <= 1 && x >= 1;
  if (!first && !second) {
    throw DomainError("FKG bound needs one of x, y in [0, 1] and the other >= 1");
  }
  Rational product = 1;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const int d = graph.Degree(v);
    product *= 1 + ((graph.InA(v) ? x : y) - 1) / Rational(d + 1);
  }
  return product;
}

Rational FkgWeightedBound(const BipartiteGraph& graph,
                          const std::vector<Rational>& x_weights,
                          const std::vector<Rational>& y_weights) {
  if (static_cast<int>(x_weights.size()) != graph.a_size() ||
      static_cast<int>(y_weights.size()) != graph.b_size()) {
    throw std::invalid_argument("one weight per vertex of each part is required");
  }
  Rational product = 1;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const int d = graph.Degree(v);
    const Rational& w =
        graph.InA(v) ? x_weights[v] : y_weights[v - graph.a_size()];
    if (graph.InA(v) ? w < 1 : (w < 0 || w > 1)) {
      throw DomainError("x weights must be >= 1 and y weights in [0, 1]");
    }
    product *= (w + d) / Rational(d + 1);
  }
  return product;
}

TransferReport VerifyTransferIdentity(const MultiGraph& graph) {
  if (graph.edge_count() > 8) {
    throw ResourceError("transfer verification is limited to 8 edges");
  }
  if (!graph.IsConnected()) throw DomainError("graph must be connected");
  TransferReport report;
  report.tutte = TutteDeletionContraction(graph);
  const Matroid matroid = CycleMatroid(graph);
  for (std::uint64_t tree : SpanningTreeMasks(graph)) {
    report.exchange_sum += PermTutteExact(LocalBasisExchange(matroid, tree));
    ++report.tree_count;
  }
  report.difference = report.tutte - report.exchange_sum;
  report.holds = report.difference.IsZero();
  return report;
}

GluingReport CheckGluing(const BipartiteGraph& h1, int root1,
                         const BipartiteGraph& h2, int root2,
                         const Rational& x, const Rational& y) {
  if (root1 < 0 || root1 >= h1.vertex_count() || root2 < 0 ||
      root2 >= h2.vertex_count()) {
    throw std::invalid_argument("root out of range");
  }
  if (h1.InA(root1) != h2.InA(root2)) {
    throw std::invalid_argument("roots must lie in the same part");
  }
  if (x < 1 || y < 0 || y > 1) {
    throw DomainError("gluing needs x >= 1 and 0 <= y <= 1");
  }
  const bool in_a = h1.InA(root1);
  const int a = h1.a_size() + h2.a_size() - (in_a ? 1 : 0);
  const int b = h1.b_size() + h2.b_size() - (in_a ? 0 : 1);
  auto map1 = [&](int v) { return h1.InA(v) ? v : v + (a - h1.a_size()); };
  // Remaining H2 vertices follow H1's within each part, skipping the root.
  auto map2 = [&](int v) {
    if (v == root2) return map1(root1);
    if (h2.InA(v)) return h1.a_size() + v - (in_a && v > root2 ? 1 : 0);
    const int j = v - h2.a_size();
    const int root_j = root2 - h2.a_size();
    return a + h1.b_size() + j - (!in_a && j > root_j ? 1 : 0);
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : h1.Edges()) edges.emplace_back(map1(u), map1(v));
  for (const auto& [u, v] : h2.Edges()) edges.emplace_back(map2(u), map2(v));

  GluingReport report;
  report.root_in_a = in_a;
  report.glued = BipartiteGraph(a, b, edges);
  report.glued_value = PermTutteExact(report.glued).Evaluate(x, y);
  report.first_value = PermTutteExact(h1).Evaluate(x, y);
  report.second_value = PermTutteExact(h2).Evaluate(x, y);
  report.lhs = in_a ? x * report.glued_value : report.glued_value;
  report.rhs = report.first_value * report.second_value;
  report.holds = report.lhs >= report.rhs;
  return report;
}

namespace {

BipartiteGraph RandomMinDegreeGraph(int min_degree, std::mt19937_64& rng) {
  const int low = std::max(1, min_degree);
  std::uniform_int_distribution<int> a_dist(low, 10 - low);
  const int a = a_dist(rng);
  std::uniform_int_distribution<int> b_dist(low, 10 - a);
  const int b = b_dist(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<bool>> adjacent(a, std::vector<bool>(b, false));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) adjacent[i][j] = coin(rng);
  }
  // Top up deficient vertices with random extra edges.
  auto top_up = [&](bool side_a, int v) {
    const int other = side_a ? b : a;
    auto has = [&](int w) { return side_a ? adjacent[v][w] : adjacent[w][v]; };
    int degree = 0;
    for (int w = 0; w < other; ++w) degree += has(w) ? 1 : 0;
    while (degree < min_degree) {
      std::uniform_int_distribution<int> pick(0, other - 1);
      const int w = pick(rng);
      if (has(w)) continue;
      if (side_a) {
        adjacent[v][w] = true;
      } else {
        adjacent[w][v] = true;
      }
      ++degree;
    }
  };
  for (int i = 0; i < a; ++i) top_up(true, i);
  for (int j = 0; j < b; ++j) top_up(false, j);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (adjacent[i][j]) edges.emplace_back(i, a + j);
    }
  }
  return BipartiteGraph(a, b, edges);
}

}  // namespace

std::vector<ConjectureViolation> ConjectureScan(int min_degree, int trials,
                                                std::uint64_t seed) {
  if (min_degree < 1 || min_degree > 5) {
    throw std::invalid_argument("min_degree must lie in [1, 5] for graphs on at most 10 vertices");
  }
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<ConjectureViolation> violations;
  for (int t = 0; t < trials; ++t) {
    BipartiteGraph graph = RandomMinDegreeGraph(min_degree, rng);
    const BivariatePolynomial p = PermTutteExact(graph);
    Rational product = p.Evaluate(2, 0) * p.Evaluate(0, 2);
    if (product < 1) violations.push_back({std::move(graph), std::move(product)});
  }
  return violations;
}

}  // namespace tuttecert
