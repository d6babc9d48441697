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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.h"
#include "tuttecert/errors.h"
#include "tuttecert/io.h"

namespace tuttecert {
namespace {

TEST(PermTutteTest, ActivitiesOfAPath) {
  // Path a0 - b - a1 with the middle vertex last: only it is active.
  const BipartiteGraph path(2, 1, {{0, 2}, {1, 2}});
  const ActivityProfile last = Activities(path, {0, 1, 2});
  EXPECT_EQ(last.ia, 0);
  EXPECT_EQ(last.ea, 1);
  const ActivityProfile first = Activities(path, {2, 0, 1});
  EXPECT_EQ(first.ia, 2);
  EXPECT_EQ(first.ea, 0);
  EXPECT_THROW(Activities(path, {0, 0, 1}), std::invalid_argument);
}

TEST(PermTutteTest, IsolatedVertexIsAlwaysActive) {
  const BipartiteGraph lonely(1, 1, {});
  EXPECT_EQ(PermTutteExact(lonely), BivariatePolynomial::X() * BivariatePolynomial::Y());
}

TEST(PermTutteTest, SingleEdge) {
  EXPECT_EQ(PermTutteExact(CompleteBipartite(1, 1)),
            (BivariatePolynomial::X() + BivariatePolynomial::Y()) * Rational(1, 2));
}

TEST(PermTutteTest, StarMatchesClosedForm) {
  for (int k = 2; k <= 9; ++k) {
    EXPECT_EQ(PermTutteExact(Star(k, true)), StarClosedForm(k)) << "k=" << k;
  }
  EXPECT_EQ(PermTutteExact(Star(4, true)).Evaluate(2, 0), Rational(7, 2));
}

TEST(PermTutteTest, DynamicProgramMatchesPermutationEnumeration) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 8, false);
    EXPECT_EQ(PermTutteExact(g), oracle::BruteForcePermTutte(g));
  }
}

TEST(PermTutteTest, ProbabilityNormalization) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BivariatePolynomial p = PermTutteExact(oracle::RandomBipartite(rng, 10, false));
    EXPECT_EQ(p.Evaluate(1, 1), Rational(1));
    EXPECT_EQ(p.CoefficientSum(), Rational(1));
  }
}

TEST(PermTutteTest, SwappingPartsTransposes) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 9, false);
    EXPECT_EQ(PermTutteExact(g.SwapParts()), PermTutteExact(g).Transpose());
  }
}

TEST(PermTutteTest, MultiplicativeOverDisjointUnions) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 5, false);
    const BipartiteGraph h = oracle::RandomBipartite(rng, 5, false);
    EXPECT_EQ(PermTutteExact(DisjointUnion(g, h)), PermTutteExact(g) * PermTutteExact(h));
  }
}

TEST(PermTutteTest, ExactRejectsLargeGraphs) {
  EXPECT_THROW(PermTutteExact(CompleteBipartite(6, 6)), ResourceError);
}

TEST(PermTutteTest, FkgBoundIsALowerBound) {
  std::mt19937_64 rng(55);
  const std::vector<std::pair<Rational, Rational>> points = {
      {2, 0}, {3, Rational(1, 2)}, {Rational(5, 4), 1}, {0, 2}, {Rational(1, 3), 4}};
  for (int trial = 0; trial < 60; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 9, false);
    const BivariatePolynomial p = PermTutteExact(g);
    for (const auto& [x, y] : points) {
      EXPECT_GE(p.Evaluate(x, y), FkgLowerBound(g, x, y));
    }
  }
  EXPECT_THROW(FkgLowerBound(CompleteBipartite(1, 1), 2, 2), DomainError);
}

TEST(PermTutteTest, FkgBoundForStar) {
  // Three leaves of degree one and a center of degree three.
  EXPECT_EQ(FkgLowerBound(Star(4, true), 2, 0), Rational(27, 8) * Rational(3, 4));
}

TEST(PermTutteTest, WeightedFkgIsALowerBound) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> numerator(0, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteGraph g = oracle::RandomBipartite(rng, 8, false);
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 0; i < g.a_size(); ++i) xs.push_back(Rational(1) + Rational(numerator(rng), 4));
    for (int j = 0; j < g.b_size(); ++j) ys.push_back(Rational(numerator(rng), 8));
    // Expected weight of active vertices, computed by enumeration.
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    Rational total = 0;
    long count = 0;
    do {
      Rational weight = 1;
      for (int v = 0; v < g.vertex_count(); ++v) {
        bool active = true;
        for (int w : g.Neighbors(v)) {
          active = active && std::find(order.begin(), order.end(), v) >
                                 std::find(order.begin(), order.end(), w);
        }
        if (active) weight *= g.InA(v) ? xs[v] : ys[v - g.a_size()];
      }
      total += weight;
      ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_GE(total / Rational(count), FkgWeightedBound(g, xs, ys));
  }
  EXPECT_THROW(FkgWeightedBound(CompleteBipartite(1, 1), {Rational(1, 2)}, {0}), DomainError);
  EXPECT_THROW(FkgWeightedBound(CompleteBipartite(1, 1), {}, {0}), std::invalid_argument);
}

TEST(PermTutteTest, TransferIdentityOnExamples) {
  const TransferReport c4 = VerifyTransferIdentity(CycleGraph(4));
  EXPECT_TRUE(c4.holds);
  EXPECT_EQ(c4.tree_count, 4);
  const MultiGraph fig = LoadMultiGraph(std::string(TUTTECERT_DATA_DIR) + "/six_vertex.json");
  const TransferReport report = VerifyTransferIdentity(fig);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.tree_count, 35);
  EXPECT_TRUE(report.difference.IsZero());
}

TEST(PermTutteTest, TransferIdentityOnRandomMultigraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const MultiGraph g = oracle::RandomConnectedMultiGraph(rng, 8);
    const TransferReport report = VerifyTransferIdentity(g);
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.tutte, oracle::SubsetExpansionTutte(g));
  }
}

TEST(PermTutteTest, TransferRejectsInvalidInput) {
  EXPECT_THROW(VerifyTransferIdentity(MultiGraph(3, {{0, 1}})), DomainError);
  EXPECT_THROW(VerifyTransferIdentity(CycleGraph(9)), ResourceError);
}

TEST(PermTutteTest, GluingInequality) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const BipartiteGraph h1 = oracle::RandomBipartite(rng, 5, true);
    const BipartiteGraph h2 = oracle::RandomBipartite(rng, 5, true);
    std::uniform_int_distribution<int> pick1(0, h1.vertex_count() - 1);
    const int root1 = pick1(rng);
    const bool in_a = h1.InA(root1);
    std::uniform_int_distribution<int> pick2(in_a ? 0 : h2.a_size(),
                                             in_a ? h2.a_size() - 1 : h2.vertex_count() - 1);
    const int root2 = pick2(rng);
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {2, 0}, {1, 1}, {3, Rational(1, 2)}, {Rational(3, 2), Rational(1, 5)}}) {
      const GluingReport report = CheckGluing(h1, root1, h2, root2, x, y);
      EXPECT_TRUE(report.holds);
      EXPECT_EQ(report.glued.vertex_count(), h1.vertex_count() + h2.vertex_count() - 1);
      EXPECT_EQ(report.glued.edge_count(), h1.edge_count() + h2.edge_count());
    }
  }
}

TEST(PermTutteTest, GluingStarsAtTheirCenters) {
  // Two stars glued at their centers form a larger star.
  const GluingReport report = CheckGluing(Star(3, true), 2, Star(4, true), 3, 2, 0);
  EXPECT_EQ(report.glued, Star(6, true));
  EXPECT_FALSE(report.root_in_a);
  EXPECT_EQ(report.lhs, Rational(31, 3));
  EXPECT_EQ(report.rhs, Rational(2) * Rational(7, 2));
  EXPECT_THROW(CheckGluing(Star(3, true), 0, Star(3, true), 2, 2, 0), std::invalid_argument);
  EXPECT_THROW(CheckGluing(Star(3, true), 2, Star(3, true), 2, 2, 2), DomainError);
}

TEST(PermTutteTest, ConjectureScanIsDeterministic) {
  const auto first = ConjectureScan(2, 30, 5);
  const auto second = ConjectureScan(2, 30, 5);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].graph, second[i].graph);
    EXPECT_LT(first[i].product, Rational(1));
  }
  EXPECT_THROW(ConjectureScan(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(ConjectureScan(6, 1, 1), std::invalid_argument);
}

TEST(PermTutteTest, SeededMinimumDegreeTwoScanFindsNoViolation) {
  EXPECT_TRUE(ConjectureScan(2, 150, 42).empty());
}

}  // namespace
}  // namespace tuttecert
