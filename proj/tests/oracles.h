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

#ifndef TUTTECERT_TESTS_ORACLES_H_
#define TUTTECERT_TESTS_ORACLES_H_

// Reference implementations used only by tests. They share no algorithmic
// code with the library: permutations are enumerated literally, components
// are found by depth-first search, and H_{n,n,n} uses its own counting DP.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "tuttecert/graphs.h"
#include "tuttecert/polynomial.h"
#include "tuttecert/rational.h"

namespace tuttecert::oracle {

// Average of x^ia y^ea over all m! vertex orders.
inline BivariatePolynomial BruteForcePermTutte(const BipartiteGraph& h) {
  const int m = h.vertex_count();
  std::vector<int> rank(m);
  std::iota(rank.begin(), rank.end(), 0);
  std::map<std::pair<int, int>, long> counts;
  long total = 0;
  do {
    int ia = 0;
    int ea = 0;
    for (int v = 0; v < m; ++v) {
      bool larger = true;
      for (int w : h.Neighbors(v)) larger = larger && rank[v] > rank[w];
      if (larger) (v < h.a_size() ? ia : ea) += 1;
    }
    ++counts[{ia, ea}];
    ++total;
  } while (std::next_permutation(rank.begin(), rank.end()));
  BivariatePolynomial p;
  for (const auto& [e, c] : counts) {
    Rational share(c, total);
    share.canonicalize();
    p.AddTerm(share, e.first, e.second);
  }
  return p;
}

inline int DfsComponents(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

// sum over edge subsets A of (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-n).
inline BivariatePolynomial SubsetExpansionTutte(const MultiGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> all;
  for (const auto& e : g.edges()) all.emplace_back(e.u, e.v);
  const int k_full = DfsComponents(n, all);
  const BivariatePolynomial xm1 =
      BivariatePolynomial::X() - BivariatePolynomial::Constant(1);
  const BivariatePolynomial ym1 =
      BivariatePolynomial::Y() - BivariatePolynomial::Constant(1);
  BivariatePolynomial sum;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) chosen.push_back(all[i]);
    }
    const int k = DfsComponents(n, chosen);
    BivariatePolynomial term = BivariatePolynomial::Constant(1);
    for (int i = 0; i < k - k_full; ++i) term = term * xm1;
    for (int i = 0; i < k + static_cast<int>(chosen.size()) - n; ++i) term = term * ym1;
    sum += term;
  }
  return sum;
}

// Exact permutation Tutte value of H_{n,n,n} at (x, y), leaves in part A.
// Vertices are placed in increasing order; the state is
//   a: K-side A vertices placed,
//   p: B vertices placed whose leaf is placed,
//   q: B vertices placed whose leaf is not,
//   r: leaves placed whose B vertex is not.
inline Rational HnnnValue(int n, const Rational& x, const Rational& y) {
  std::map<std::tuple<int, int, int, int>, Rational> layer;
  layer[{0, 0, 0, 0}] = 1;
  for (int step = 0; step < 3 * n; ++step) {
    std::map<std::tuple<int, int, int, int>, Rational> next;
    for (const auto& [state, weight] : layer) {
      const auto [a, p, q, r] = state;
      const int free_b = n - p - q - r;
      if (a < n) {
        const Rational w = p + q == n ? x : Rational(1);
        next[{a + 1, p, q, r}] += weight * (n - a) * w;
      }
      if (r > 0) {
        const Rational w = a == n ? y : Rational(1);
        next[{a, p + 1, q, r - 1}] += weight * r * w;
      }
      if (free_b > 0) {
        next[{a, p, q + 1, r}] += weight * free_b;
        next[{a, p, q, r + 1}] += weight * free_b;
      }
      if (q > 0) next[{a, p + 1, q - 1, r}] += weight * q * x;
    }
    layer = std::move(next);
  }
  Rational total = layer[{n, n, 0, 0}];
  return total / Rational(Factorial(3 * n));
}

// A random connected multigraph with at most |max_edges| edges: a random
// spanning tree plus random extra edges, loops and parallel edges included.
inline MultiGraph RandomConnectedMultiGraph(std::mt19937_64& rng, int max_edges) {
  std::uniform_int_distribution<int> vertices_dist(1, std::min(6, max_edges + 1));
  const int n = vertices_dist(rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<int> extra_dist(0, max_edges - (n - 1));
  const int extra = extra_dist(rng);
  std::uniform_int_distribution<int> endpoint(0, n - 1);
  for (int i = 0; i < extra; ++i) edges.emplace_back(endpoint(rng), endpoint(rng));
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph(n, edges);
}

// A random bipartite graph on at most |max_vertices| vertices.
inline BipartiteGraph RandomBipartite(std::mt19937_64& rng, int max_vertices,
                                      bool connected) {
  while (true) {
    std::uniform_int_distribution<int> total_dist(2, max_vertices);
    const int total = total_dist(rng);
    std::uniform_int_distribution<int> a_dist(1, total - 1);
    const int a = a_dist(rng);
    const int b = total - a;
    std::uniform_real_distribution<double> density_dist(0.2, 0.9);
    std::bernoulli_distribution coin(density_dist(rng));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        if (coin(rng)) edges.emplace_back(i, a + j);
      }
    }
    BipartiteGraph g(a, b, edges);
    if (!connected || ConnectedComponents(g).size() == 1) return g;
  }
}

}  // namespace tuttecert::oracle

#endif  // TUTTECERT_TESTS_ORACLES_H_
