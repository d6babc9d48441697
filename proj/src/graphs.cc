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

#include "tuttecert/graphs.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "tuttecert/errors.h"
#include "union_find.h"

namespace tuttecert {

BipartiteGraph::BipartiteGraph(int a_size, int b_size,
                               const std::vector<std::pair<int, int>>& edges)
    : a_size_(a_size), b_size_(b_size) {
  if (a_size < 0 || b_size < 0) {
    throw std::invalid_argument("part sizes must be non-negative");
  }
  adjacency_.resize(a_size + b_size);
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= a_size) {
      throw std::invalid_argument("edge endpoint " + std::to_string(i) +
                                  " is not an A vertex");
    }
    if (j < a_size || j >= a_size + b_size) {
      throw std::invalid_argument("edge endpoint " + std::to_string(j) +
                                  " is not a B vertex");
    }
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& neighbors : adjacency_) {
    std::sort(neighbors.begin(), neighbors.end());
    if (std::adjacent_find(neighbors.begin(), neighbors.end()) !=
        neighbors.end()) {
      throw std::invalid_argument("parallel edges are not allowed");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool BipartiteGraph::Adjacent(int u, int v) const {
  const auto& n = adjacency_[u];
  return std::binary_search(n.begin(), n.end(), v);
}

bool BipartiteGraph::HasIsolatedVertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& n) { return n.empty(); });
}

int BipartiteGraph::MinDegree() const {
  int result = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (v == 0 || Degree(v) < result) result = Degree(v);
  }
  return result;
}

std::vector<std::pair<int, int>> BipartiteGraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count_);
  for (int i = 0; i < a_size_; ++i) {
    for (int j : adjacency_[i]) edges.emplace_back(i, j);
  }
  return edges;
}

BipartiteGraph BipartiteGraph::SwapParts() const {
  // Old B vertex j becomes new A vertex j - a_size; old A vertex i becomes
  // new B vertex b_size + i.
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count_);
  for (const auto& [i, j] : Edges()) {
    edges.emplace_back(j - a_size_, b_size_ + i);
  }
  return BipartiteGraph(b_size_, a_size_, edges);
}

BipartiteGraph DisjointUnion(const BipartiteGraph& g, const BipartiteGraph& h) {
  const int a = g.a_size() + h.a_size();
  auto g_index = [&](int v) { return g.InA(v) ? v : v + h.a_size(); };
  auto h_index = [&](int v) {
    return h.InA(v) ? g.a_size() + v : a + g.b_size() + (v - h.a_size());
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.Edges()) edges.emplace_back(g_index(i), g_index(j));
  for (const auto& [i, j] : h.Edges()) edges.emplace_back(h_index(i), h_index(j));
  return BipartiteGraph(a, g.b_size() + h.b_size(), edges);
}

BipartiteGraph CompleteBipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("complete bipartite graph needs both parts >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return BipartiteGraph(a, b, edges);
}

BipartiteGraph Star(int k, bool leaves_in_a) {
  if (k < 2) throw std::invalid_argument("star needs k >= 2");
  const BipartiteGraph center_in_b = CompleteBipartite(k - 1, 1);
  return leaves_in_a ? center_in_b : center_in_b.SwapParts();
}

BipartiteGraph Habc(int a, int b, int c) {
  if (a < 1 || b < 1) throw std::invalid_argument("H_{a,b,c} needs a, b >= 1");
  if (c < 0 || c > b) {
    throw std::invalid_argument("H_{a,b,c} needs 0 <= c <= b");
  }
  // A = K-part [0, a) then leaves [a, a + c); B = [a + c, a + c + b).
  const int a_side = a + c;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a_side + j);
  }
  for (int leaf = 0; leaf < c; ++leaf) edges.emplace_back(a + leaf, a_side + leaf);
  return BipartiteGraph(a_side, b, edges);
}

std::vector<BipartiteGraph> ConnectedComponents(const BipartiteGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> component(n, -1);
  std::vector<BipartiteGraph> result;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<int> members;
    std::queue<int> queue;
    queue.push(start);
    component[start] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      members.push_back(v);
      for (int w : graph.Neighbors(v)) {
        if (component[w] < 0) {
          component[w] = id;
          queue.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> new_index(n, -1);
    int a = 0;
    for (int v : members) {
      if (graph.InA(v)) new_index[v] = a++;
    }
    int b = 0;
    for (int v : members) {
      if (!graph.InA(v)) new_index[v] = a + b++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : members) {
      if (!graph.InA(v)) continue;
      for (int w : graph.Neighbors(v)) edges.emplace_back(new_index[v], new_index[w]);
    }
    result.emplace_back(a, b, edges);
  }
  return result;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const BipartiteGraph& g, const BipartiteGraph& h,
                    bool preserve_parts)
      : g_(g), h_(h), preserve_parts_(preserve_parts), n_(g.vertex_count()),
        h_matrix_(static_cast<size_t>(n_) * n_, 0), map_(n_, -1),
        used_(n_, false) {
    for (int v = 0; v < n_; ++v) {
      for (int w : h.Neighbors(v)) h_matrix_[static_cast<size_t>(v) * n_ + w] = 1;
    }
    BuildOrder();
  }

  bool Run() { return Extend(0); }

 private:
  // BFS order, each component rooted at its highest-degree vertex, so that
  // every non-root vertex has an already-mapped neighbor.
  void BuildOrder() {
    std::vector<int> by_degree(n_);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int u, int v) {
      return g_.Degree(u) > g_.Degree(v);
    });
    std::vector<bool> seen(n_, false);
    anchor_.assign(n_, -1);
    for (int root : by_degree) {
      if (seen[root]) continue;
      std::queue<int> queue;
      queue.push(root);
      seen[root] = true;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        order_.push_back(v);
        for (int w : g_.Neighbors(v)) {
          if (!seen[w]) {
            seen[w] = true;
            anchor_[w] = v;
            queue.push(w);
          }
        }
      }
    }
  }

  bool Compatible(int v, int c) const {
    if (used_[c] || g_.Degree(v) != h_.Degree(c)) return false;
    if (preserve_parts_ && g_.InA(v) != h_.InA(c)) return false;
    int mapped_neighbors_v = 0;
    for (int w : g_.Neighbors(v)) {
      if (map_[w] < 0) continue;
      ++mapped_neighbors_v;
      if (!h_matrix_[static_cast<size_t>(c) * n_ + map_[w]]) return false;
    }
    int mapped_neighbors_c = 0;
    for (int w : h_.Neighbors(c)) {
      if (used_[w]) ++mapped_neighbors_c;
    }
    return mapped_neighbors_v == mapped_neighbors_c;
  }

  bool Extend(int k) {
    if (k == n_) return true;
    const int v = order_[k];
    auto attempt = [&](int c) {
      if (!Compatible(v, c)) return false;
      map_[v] = c;
      used_[c] = true;
      if (Extend(k + 1)) return true;
      map_[v] = -1;
      used_[c] = false;
      return false;
    };
    if (anchor_[v] >= 0) {
      for (int c : h_.Neighbors(map_[anchor_[v]])) {
        if (attempt(c)) return true;
      }
    } else {
      for (int c = 0; c < n_; ++c) {
        if (attempt(c)) return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  const BipartiteGraph& h_;
  bool preserve_parts_;
  int n_;
  std::vector<char> h_matrix_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> anchor_;
};

std::vector<std::pair<int, int>> DegreeSignature(const BipartiteGraph& g,
                                                 bool preserve_parts) {
  std::vector<std::pair<int, int>> signature;
  for (int v = 0; v < g.vertex_count(); ++v) {
    signature.emplace_back(preserve_parts && g.InA(v) ? 1 : 0, g.Degree(v));
  }
  std::sort(signature.begin(), signature.end());
  return signature;
}

}  // namespace

bool Isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                bool preserve_parts) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return false;
  }
  if (preserve_parts && g.a_size() != h.a_size()) return false;
  if (DegreeSignature(g, preserve_parts) != DegreeSignature(h, preserve_parts)) {
    return false;
  }
  return IsomorphismSearch(g, h, preserve_parts).Run();
}

MultiGraph::MultiGraph(int vertex_count,
                       const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (edges.size() > 64) {
    throw std::invalid_argument("multigraphs are limited to 64 edges");
  }
  int label = 1;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(label) +
                                  " has an endpoint outside [0, " +
                                  std::to_string(vertex_count) + ")");
    }
    edges_.push_back({u, v, label++});
  }
}

int MultiGraph::ComponentCount(std::uint64_t edge_mask) const {
  UnionFind uf(vertex_count_);
  for (int i = 0; i < edge_count(); ++i) {
    if (edge_mask >> i & 1u) uf.Union(edges_[i].u, edges_[i].v);
  }
  return uf.components();
}

int MultiGraph::ComponentCount() const {
  const int m = edge_count();
  return ComponentCount(m == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << m) - 1);
}

MultiGraph CycleGraph(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MultiGraph(n, edges);
}

std::vector<std::uint64_t> SpanningTreeMasks(const MultiGraph& graph) {
  if (!graph.IsConnected()) {
    throw DomainError("spanning trees require a connected graph");
  }
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  std::vector<std::uint64_t> trees;
  if (n <= 1) {
    trees.push_back(0);
    return trees;
  }
  const int needed = n - 1;
  std::function<void(int, const UnionFind&, std::uint64_t, int)> recurse =
      [&](int index, const UnionFind& uf, std::uint64_t mask, int chosen) {
        if (chosen == needed) {
          trees.push_back(mask);
          return;
        }
        if (m - index < needed - chosen) return;
        const MultiEdge& e = graph.edges()[index];
        UnionFind with = uf;
        if (with.Union(e.u, e.v)) {
          recurse(index + 1, with, mask | std::uint64_t{1} << index, chosen + 1);
        }
        recurse(index + 1, uf, mask, chosen);
      };
  recurse(0, UnionFind(n), 0, 0);
  return trees;
}

std::vector<std::vector<int>> SpanningTrees(const MultiGraph& graph) {
  std::vector<std::vector<int>> result;
  for (std::uint64_t mask : SpanningTreeMasks(graph)) {
    std::vector<int> labels;
    for (int i = 0; i < graph.edge_count(); ++i) {
      if (mask >> i & 1u) labels.push_back(i + 1);
    }
    result.push_back(std::move(labels));
  }
  return result;
}

}  // namespace tuttecert
