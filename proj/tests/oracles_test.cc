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

#include "oracles.h"

#include <gtest/gtest.h>

#include "tuttecert/graphs.h"

namespace tuttecert {
namespace {

TEST(OraclesTest, BruteForceOnSingleEdge) {
  const BivariatePolynomial p = oracle::BruteForcePermTutte(CompleteBipartite(1, 1));
  EXPECT_EQ(p.ToString(), "1/2*x + 1/2*y");
}

TEST(OraclesTest, SubsetExpansionOnFourCycle) {
  EXPECT_EQ(oracle::SubsetExpansionTutte(CycleGraph(4)).ToString(),
            "x^3 + x^2 + x + y");
}

TEST(OraclesTest, HnnnCountingAgreesWithBruteForce) {
  for (int n = 1; n <= 2; ++n) {
    const BivariatePolynomial p = oracle::BruteForcePermTutte(Habc(n, n, n));
    for (const auto& [x, y] : {std::pair<int, int>{2, 0}, {0, 2}, {1, 1}, {3, 2}}) {
      EXPECT_EQ(oracle::HnnnValue(n, x, y), p.Evaluate(x, y)) << n << " " << x << " " << y;
    }
  }
}

TEST(OraclesTest, HnnnSmallValues) {
  EXPECT_EQ(oracle::HnnnValue(1, 2, 0), Rational(2));
  EXPECT_EQ(oracle::HnnnValue(2, 2, 0), Rational(23, 6));
  EXPECT_EQ(oracle::HnnnValue(1, 0, 2), Rational(2, 3));
  EXPECT_EQ(oracle::HnnnValue(2, 0, 2), Rational(1, 2));
}

}  // namespace
}  // namespace tuttecert
