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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.h"
#include "tuttecert/errors.h"
#include "tuttecert/io.h"
#include "tuttecert/matroid.h"

namespace tuttecert {
namespace {

const BivariatePolynomial kX = BivariatePolynomial::X();
const BivariatePolynomial kY = BivariatePolynomial::Y();

TEST(TutteTest, SmallGraphs) {
  EXPECT_EQ(TutteDeletionContraction(MultiGraph(2, {{0, 1}})), kX);
  EXPECT_EQ(TutteDeletionContraction(MultiGraph(1, {{0, 0}})), kY);
  EXPECT_EQ(TutteDeletionContraction(MultiGraph(3, {})), BivariatePolynomial::Constant(1));
  EXPECT_EQ(TutteDeletionContraction(CycleGraph(3)), kX * kX + kX + kY);
  EXPECT_EQ(TutteDeletionContraction(MultiGraph(2, {{0, 1}, {0, 1}})), kX + kY);
}

TEST(TutteTest, SixVertexGraph) {
  const MultiGraph g = LoadMultiGraph(std::string(TUTTECERT_DATA_DIR) + "/six_vertex.json");
  const BivariatePolynomial t = TutteDeletionContraction(g);
  EXPECT_EQ(t.ToString(),
            "x^5 + 3*x^4 + x^3*y + 5*x^3 + 4*x^2*y + 2*x*y^2 + y^3 + 5*x^2 + "
            "6*x*y + 3*y^2 + 2*x + 2*y");
  EXPECT_EQ(t.Evaluate(1, 1), Rational(35));
  EXPECT_EQ(TutteMatroid(CycleMatroid(g)), t);
  EXPECT_EQ(TutteByActivities(g), t);
}

TEST(TutteTest, UniformMatroid) {
  EXPECT_EQ(TutteMatroid(Uniform(3, 2)), kX * kX + kX + kY);
  EXPECT_EQ(TutteMatroid(Uniform(4, 2)), kX * kX + kX * 2 + kY * 2 + kY * kY);
}

TEST(TutteTest, ThreeRoutesAgreeWithSubsetExpansion) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const MultiGraph g = oracle::RandomConnectedMultiGraph(rng, 9);
    const BivariatePolynomial expected = oracle::SubsetExpansionTutte(g);
    EXPECT_EQ(TutteDeletionContraction(g), expected);
    EXPECT_EQ(TutteMatroid(CycleMatroid(g)), expected);
    EXPECT_EQ(TutteByActivities(g), expected);
  }
}

TEST(TutteTest, ActivitiesIgnoreTheLabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = oracle::RandomConnectedMultiGraph(rng, 8);
    std::vector<int> labeling(g.edge_count());
    std::iota(labeling.begin(), labeling.end(), 1);
    std::shuffle(labeling.begin(), labeling.end(), rng);
    EXPECT_EQ(TutteByActivities(g, labeling), TutteByActivities(g));
  }
}

TEST(TutteTest, ActivitiesRejectBadLabeling) {
  const MultiGraph g = CycleGraph(3);
  EXPECT_THROW(TutteByActivities(g, {1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(TutteByActivities(g, {1, 2}), std::invalid_argument);
  EXPECT_THROW(TutteByActivities(MultiGraph(3, {{0, 1}})), DomainError);
}

TEST(TutteTest, DualitySwapsVariables) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = CycleMatroid(oracle::RandomConnectedMultiGraph(rng, 9));
    EXPECT_EQ(TutteMatroid(Dual(m)), TutteMatroid(m).Transpose());
  }
}

TEST(TutteTest, DirectSumMultiplies) {
  const Matroid a = Uniform(4, 2);
  const Matroid b = CycleMatroid(CycleGraph(4));
  EXPECT_EQ(TutteMatroid(DirectSum(a, b)), TutteMatroid(a) * TutteMatroid(b));
}

}  // namespace
}  // namespace tuttecert
