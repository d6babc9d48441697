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

#ifndef TUTTECERT_GRAPHS_H_
#define TUTTECERT_GRAPHS_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace tuttecert {

// A simple bipartite graph. Part A occupies vertex indices [0, a_size) and
// part B occupies [a_size, a_size + b_size); membership is a range test.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Each edge is (i, j) with i an A index and j an absolute B index.
  // Throws std::invalid_argument on out-of-range or repeated edges.
  BipartiteGraph(int a_size, int b_size,
                 const std::vector<std::pair<int, int>>& edges);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  int vertex_count() const { return a_size_ + b_size_; }
  int edge_count() const { return edge_count_; }

  bool InA(int v) const { return v < a_size_; }
  const std::vector<int>& Neighbors(int v) const { return adjacency_[v]; }
  int Degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool Adjacent(int u, int v) const;
  bool HasIsolatedVertex() const;
  int MinDegree() const;

  // Edges as (A vertex, B vertex), sorted.
  std::vector<std::pair<int, int>> Edges() const;

  // The same graph with the roles of A and B exchanged.
  BipartiteGraph SwapParts() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int a_size_ = 0;
  int b_size_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adjacency_;
};

BipartiteGraph DisjointUnion(const BipartiteGraph& g, const BipartiteGraph& h);

// K_{a,b}.
BipartiteGraph CompleteBipartite(int a, int b);

// The star S_k on k vertices. With leaves_in_a the k-1 leaves form part A and
// the center is the single B vertex; otherwise the center is in A.
BipartiteGraph Star(int k, bool leaves_in_a);

// K_{a,b} plus c pendant leaves attached to the first c vertices of B. The
// leaves join part A, giving parts of size (a + c, b).
BipartiteGraph Habc(int a, int b, int c);

// Maximal connected induced subgraphs, each re-indexed with part membership
// preserved. Components are ordered by their smallest original vertex.
std::vector<BipartiteGraph> ConnectedComponents(const BipartiteGraph& graph);

// Graph isomorphism by backtracking with degree pruning. With preserve_parts
// the isomorphism must map A to A and B to B.
bool Isomorphic(const BipartiteGraph& g, const BipartiteGraph& h,
                bool preserve_parts);

struct MultiEdge {
  int u;
  int v;
  int label;  // 1..m in construction order
};

// Labeled multigraph; loops and parallel edges are allowed.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  // Edge with label l is edges()[l - 1].
  const MultiEdge& EdgeByLabel(int label) const { return edges_[label - 1]; }

  // Number of connected components of (V, S) where bit i of the mask selects
  // the edge labeled i + 1.
  int ComponentCount(std::uint64_t edge_mask) const;
  int ComponentCount() const;
  bool IsConnected() const { return ComponentCount() <= 1; }

 private:
  int vertex_count_ = 0;
  std::vector<MultiEdge> edges_;
};

MultiGraph CycleGraph(int n);

// Every spanning tree as its sorted list of edge labels. Throws DomainError
// for disconnected input.
std::vector<std::vector<int>> SpanningTrees(const MultiGraph& graph);
std::vector<std::uint64_t> SpanningTreeMasks(const MultiGraph& graph);

}  // namespace tuttecert

#endif  // TUTTECERT_GRAPHS_H_
