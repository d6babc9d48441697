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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.h"
#include "tuttecert/errors.h"
#include "tuttecert/io.h"
#include "tuttecert/tutte.h"

namespace tuttecert {
namespace {

void ExpectDegreeSums(const BipartiteGraph& g) {
  int a_sum = 0;
  int b_sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    (g.InA(v) ? a_sum : b_sum) += g.Degree(v);
    for (int w : g.Neighbors(v)) {
      EXPECT_NE(g.InA(v), g.InA(w));
      EXPECT_TRUE(g.Adjacent(w, v));
    }
  }
  EXPECT_EQ(a_sum, g.edge_count());
  EXPECT_EQ(b_sum, g.edge_count());
}

TEST(GraphsTest, CompleteBipartite) {
  const BipartiteGraph k11 = CompleteBipartite(1, 1);
  EXPECT_EQ(k11.vertex_count(), 2);
  EXPECT_EQ(k11.edge_count(), 1);
  const BipartiteGraph k23 = CompleteBipartite(2, 3);
  EXPECT_EQ(k23.vertex_count(), 5);
  EXPECT_EQ(k23.edge_count(), 6);
  for (int v = 0; v < 2; ++v) EXPECT_EQ(k23.Degree(v), 3);
  for (int v = 2; v < 5; ++v) EXPECT_EQ(k23.Degree(v), 2);
  EXPECT_THROW(CompleteBipartite(0, 3), std::invalid_argument);
  EXPECT_THROW(CompleteBipartite(3, 0), std::invalid_argument);
}

TEST(GraphsTest, Stars) {
  EXPECT_EQ(Star(2, true), CompleteBipartite(1, 1));
  const BipartiteGraph leaves_a = Star(4, true);
  EXPECT_EQ(leaves_a.a_size(), 3);
  EXPECT_EQ(leaves_a.b_size(), 1);
  EXPECT_EQ(leaves_a.Degree(3), 3);
  const BipartiteGraph center_a = Star(4, false);
  EXPECT_EQ(center_a.a_size(), 1);
  EXPECT_EQ(center_a.Degree(0), 3);
  EXPECT_THROW(Star(1, true), std::invalid_argument);
}

TEST(GraphsTest, HabcFamily) {
  const BipartiteGraph h666 = Habc(6, 6, 6);
  EXPECT_EQ(h666.vertex_count(), 18);
  EXPECT_EQ(h666.edge_count(), 42);
  EXPECT_EQ(Habc(2, 3, 0), CompleteBipartite(2, 3));
  const BipartiteGraph h222 = Habc(2, 2, 2);
  EXPECT_EQ(h222.vertex_count(), 6);
  std::vector<int> a_degrees;
  std::vector<int> b_degrees;
  for (int v = 0; v < 6; ++v) {
    (h222.InA(v) ? a_degrees : b_degrees).push_back(h222.Degree(v));
  }
  EXPECT_EQ(a_degrees, (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(b_degrees, (std::vector<int>{3, 3}));
  EXPECT_THROW(Habc(2, 2, 3), std::invalid_argument);
  // Bottom two layers of H_{6,6,6} form K_{6,6}.
  std::vector<std::pair<int, int>> k_edges;
  for (const auto& [i, j] : h666.Edges()) {
    if (i < 6) k_edges.emplace_back(i, j - 6);
  }
  EXPECT_EQ(BipartiteGraph(6, 6, k_edges), CompleteBipartite(6, 6));
}

TEST(GraphsTest, HabcLeafCount) {
  for (int a = 2; a <= 4; ++a) {
    for (int b = 2; b <= 4; ++b) {
      for (int c = 0; c <= b; ++c) {
        const BipartiteGraph h = Habc(a, b, c);
        int leaves = 0;
        for (int v = 0; v < h.vertex_count(); ++v) leaves += h.Degree(v) == 1;
        EXPECT_EQ(leaves, c);
        ExpectDegreeSums(h);
      }
    }
  }
}

TEST(GraphsTest, RejectsInvalidEdges) {
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 4}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), std::invalid_argument);
}

TEST(GraphsTest, ConnectedComponents) {
  EXPECT_EQ(ConnectedComponents(CompleteBipartite(2, 3)).size(), 1u);
  const BipartiteGraph two = DisjointUnion(CompleteBipartite(1, 1), CompleteBipartite(1, 1));
  const auto parts = ConnectedComponents(two);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], CompleteBipartite(1, 1));
  EXPECT_EQ(parts[1], CompleteBipartite(1, 1));
  const BipartiteGraph isolated(2, 1, {{0, 2}});
  const auto pieces = ConnectedComponents(isolated);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[1].vertex_count(), 1);
  EXPECT_EQ(pieces[1].a_size(), 1);
}

TEST(GraphsTest, SwapPartsIsAnInvolution) {
  const BipartiteGraph h = Habc(2, 3, 2);
  const BipartiteGraph swapped = h.SwapParts();
  EXPECT_EQ(swapped.a_size(), h.b_size());
  EXPECT_EQ(swapped.SwapParts(), h);
  ExpectDegreeSums(swapped);
}

TEST(GraphsTest, Isomorphism) {
  EXPECT_TRUE(Isomorphic(CompleteBipartite(2, 3), CompleteBipartite(3, 2), false));
  EXPECT_FALSE(Isomorphic(CompleteBipartite(2, 3), CompleteBipartite(3, 2), true));
  EXPECT_TRUE(Isomorphic(CompleteBipartite(2, 3), CompleteBipartite(3, 2).SwapParts(), true));
  // Same vertex counts, different structure.
  const BipartiteGraph c6(3, 3, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 3}});
  const BipartiteGraph c4_plus_edge(3, 3, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(Isomorphic(c6, c4_plus_edge, false));
  // A relabeled copy is recognized.
  const BipartiteGraph relabeled(3, 3, {{2, 4}, {2, 5}, {0, 5}, {0, 3}, {1, 3}, {1, 4}});
  EXPECT_TRUE(Isomorphic(c6, relabeled, true));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 9, false);
    std::vector<int> a_perm(g.a_size());
    std::vector<int> b_perm(g.b_size());
    std::iota(a_perm.begin(), a_perm.end(), 0);
    std::iota(b_perm.begin(), b_perm.end(), 0);
    std::shuffle(a_perm.begin(), a_perm.end(), rng);
    std::shuffle(b_perm.begin(), b_perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.Edges()) {
      edges.emplace_back(a_perm[i], g.a_size() + b_perm[j - g.a_size()]);
    }
    EXPECT_TRUE(Isomorphic(g, BipartiteGraph(g.a_size(), g.b_size(), edges), true));
  }
}

TEST(GraphsTest, SpanningTreesOfCycle) {
  const auto trees = SpanningTrees(CycleGraph(4));
  ASSERT_EQ(trees.size(), 4u);
  for (const auto& t : trees) EXPECT_EQ(t.size(), 3u);
}

TEST(GraphsTest, SpanningTreesOfSixVertexGraph) {
  const MultiGraph g = LoadMultiGraph(std::string(TUTTECERT_DATA_DIR) + "/six_vertex.json");
  const auto trees = SpanningTrees(g);
  EXPECT_NE(std::find(trees.begin(), trees.end(), std::vector<int>{1, 2, 3, 5, 7}),
            trees.end());
}

TEST(GraphsTest, TreeHasOneSpanningTree) {
  const MultiGraph path(4, {{0, 1}, {1, 2}, {1, 3}});
  const auto trees = SpanningTrees(path);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0], (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(SpanningTrees(MultiGraph(1, {{0, 0}})).size(), 1u);
}

TEST(GraphsTest, DisconnectedGraphHasNoSpanningTree) {
  EXPECT_THROW(SpanningTrees(MultiGraph(3, {{0, 1}})), DomainError);
}

TEST(GraphsTest, SpanningTreeCountMatchesTutteAtOneOne) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = oracle::RandomConnectedMultiGraph(rng, 8);
    EXPECT_EQ(Rational(static_cast<long>(SpanningTrees(g).size())),
              TutteDeletionContraction(g).Evaluate(1, 1));
  }
}

TEST(GraphsTest, MultiGraphLabelsAndComponents) {
  const MultiGraph g(3, {{0, 1}, {1, 1}, {0, 1}});
  EXPECT_EQ(g.EdgeByLabel(2).u, 1);
  EXPECT_EQ(g.EdgeByLabel(3).label, 3);
  EXPECT_EQ(g.ComponentCount(), 2);
  EXPECT_EQ(g.ComponentCount(0), 3);
  EXPECT_FALSE(g.IsConnected());
}

}  // namespace
}  // namespace tuttecert
