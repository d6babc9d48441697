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

#include "tuttecert/tutte.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tuttecert/errors.h"
#include "union_find.h"

namespace tuttecert {

namespace {

struct WorkEdge {
  int u;
  int v;
  int label;
};

int Components(int n, const std::vector<WorkEdge>& edges, int skip) {
  UnionFind uf(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i != skip) uf.Union(edges[i].u, edges[i].v);
  }
  return uf.components();
}

BivariatePolynomial DeletionContraction(int n, std::vector<WorkEdge> edges) {
  const int base = Components(n, edges, -1);
  int split = -1;
  int loops = 0;
  int bridges = 0;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].u == edges[i].v) {
      ++loops;
    } else if (Components(n, edges, i) > base) {
      ++bridges;
    } else if (split < 0 || edges[i].label > edges[split].label) {
      split = i;
    }
  }
  if (split < 0) return BivariatePolynomial::Monomial(1, bridges, loops);

  const WorkEdge e = edges[split];
  edges.erase(edges.begin() + split);
  BivariatePolynomial result = DeletionContraction(n, edges);
  // Contract: merge e.v into e.u, then move the last vertex into e.v's slot.
  const int keep = std::min(e.u, e.v);
  const int gone = std::max(e.u, e.v);
  for (auto& f : edges) {
    if (f.u == gone) f.u = keep;
    if (f.v == gone) f.v = keep;
    if (f.u == n - 1) f.u = gone;
    if (f.v == n - 1) f.v = gone;
  }
  result += DeletionContraction(n - 1, std::move(edges));
  return result;
}

}  // namespace

BivariatePolynomial TutteDeletionContraction(const MultiGraph& graph) {
  if (graph.edge_count() > 24) {
    throw ResourceError("deletion-contraction is limited to 24 edges");
  }
  std::vector<WorkEdge> edges;
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v, e.label});
  return DeletionContraction(graph.vertex_count(), std::move(edges));
}

BivariatePolynomial TutteMatroid(const Matroid& matroid) {
  const int m = matroid.ground_size();
  if (m > 24) throw ResourceError("subset expansion is limited to 24 elements");
  const int r = matroid.FullRank();
  // counts[a][b]: subsets with corank a and nullity b.
  std::vector<std::vector<BigInt>> counts(r + 1, std::vector<BigInt>(m + 1));
  const ElementSet end = ElementSet{1} << m;
  for (ElementSet s = 0; s < end; ++s) {
    const int rank = matroid.Rank(s);
    counts[r - rank][Cardinality(s) - rank] += 1;
  }
  // Expand (x - 1)^a (y - 1)^b with binomial coefficients.
  std::vector<std::vector<BigInt>> binom(m + 1, std::vector<BigInt>(m + 1));
  for (int n = 0; n <= m; ++n) {
    binom[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  BivariatePolynomial result;
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= m; ++b) {
      if (counts[a][b] == 0) continue;
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          const int sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
          BigInt c = counts[a][b] * binom[a][i] * binom[b][j] * sign;
          result.AddTerm(Rational(c), i, j);
        }
      }
    }
  }
  return result;
}

BivariatePolynomial TutteByActivities(const MultiGraph& graph,
                                      const std::vector<int>& labeling) {
  const int m = graph.edge_count();
  if (m > 16) throw ResourceError("activity enumeration is limited to 16 edges");
  if (static_cast<int>(labeling.size()) != m) {
    throw std::invalid_argument("labeling must assign one label per edge");
  }
  std::vector<int> sorted = labeling;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i) {
    if (sorted[i] != i + 1) {
      throw std::invalid_argument("labeling must be a permutation of 1..m");
    }
  }
  const int n = graph.vertex_count();
  const auto& edges = graph.edges();
  BivariatePolynomial result;
  for (std::uint64_t tree : SpanningTreeMasks(graph)) {
    // cut[e] holds the edges crossing the two sides of T - e.
    std::vector<std::uint64_t> cut(m, 0);
    int internal = 0;
    for (int e = 0; e < m; ++e) {
      if (!(tree >> e & 1u)) continue;
      UnionFind uf(n);
      for (int f = 0; f < m; ++f) {
        if (f != e && (tree >> f & 1u)) uf.Union(edges[f].u, edges[f].v);
      }
      bool active = true;
      for (int f = 0; f < m; ++f) {
        if (uf.Find(edges[f].u) != uf.Find(edges[f].v)) {
          cut[e] |= std::uint64_t{1} << f;
          if (labeling[f] > labeling[e]) active = false;
        }
      }
      if (active) ++internal;
    }
    int external = 0;
    for (int f = 0; f < m; ++f) {
      if (tree >> f & 1u) continue;
      // The fundamental cycle of f is f plus every tree edge whose cut holds f.
      bool active = true;
      for (int e = 0; e < m; ++e) {
        if ((cut[e] >> f & 1u) && labeling[e] > labeling[f]) active = false;
      }
      if (active) ++external;
    }
    result.AddTerm(1, internal, external);
  }
  return result;
}

BivariatePolynomial TutteByActivities(const MultiGraph& graph) {
  std::vector<int> identity(graph.edge_count());
  for (int i = 0; i < graph.edge_count(); ++i) identity[i] = i + 1;
  return TutteByActivities(graph, identity);
}

}  // namespace tuttecert
