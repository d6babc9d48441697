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

#ifndef TUTTECERT_PERM_TUTTE_H_
#define TUTTECERT_PERM_TUTTE_H_

#include <cstdint>
#include <vector>

#include "tuttecert/graphs.h"
#include "tuttecert/polynomial.h"
#include "tuttecert/rational.h"

namespace tuttecert {

// Numbers of active vertices in each part under one vertex ordering.
struct ActivityProfile {
  int ia = 0;
  int ea = 0;
};

// Activities when |order| lists vertices from smallest to largest. A vertex
// is active when it comes after all of its neighbors; isolated vertices are
// always active.
ActivityProfile Activities(const BipartiteGraph& graph,
                           const std::vector<int>& order);

// The average of x^ia y^ea over all orderings, computed exactly by a dynamic
// program over the set of already placed vertices. At most 11 vertices, else
// ResourceError.
BivariatePolynomial PermTutteExact(const BipartiteGraph& graph);

// (x^(k-1) + ... + x + y) / k, the value for the star with leaves in A.
BivariatePolynomial StarClosedForm(int k);

// prod_A (1 + (x-1)/(d+1)) * prod_B (1 + (y-1)/(d+1)). Requires
// 0 <= x <= 1 <= y or 0 <= y <= 1 <= x, else DomainError.
Rational FkgLowerBound(const BipartiteGraph& graph, const Rational& x,
                       const Rational& y);

// prod_A (x_i + d_i)/(d_i + 1) * prod_B (y_j + d_j)/(d_j + 1) with one weight
// per vertex of each part; x weights >= 1 and y weights in [0, 1], else
// DomainError.
Rational FkgWeightedBound(const BipartiteGraph& graph,
                          const std::vector<Rational>& x_weights,
                          const std::vector<Rational>& y_weights);

struct TransferReport {
  bool holds = false;
  int tree_count = 0;
  BivariatePolynomial tutte;
  BivariatePolynomial exchange_sum;
  BivariatePolynomial difference;
};

// Compares T_G with the sum of the permutation Tutte polynomials of the local
// basis exchange graphs over all spanning trees. G must be connected
// (DomainError) with at most 8 edges (ResourceError).
TransferReport VerifyTransferIdentity(const MultiGraph& graph);

struct GluingReport {
  bool root_in_a = false;
  BipartiteGraph glued;
  Rational glued_value;
  Rational first_value;
  Rational second_value;
  // x * T(H) when the root is in A, T(H) otherwise.
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// Identifies root2 of H2 with root1 of H1 and evaluates both sides of the
// gluing inequality at (x, y). Roots must lie in the same part
// (std::invalid_argument); requires x >= 1 and 0 <= y <= 1 (DomainError).
// In the glued graph H1 keeps its indices within each part and the remaining
// vertices of H2 follow.
GluingReport CheckGluing(const BipartiteGraph& h1, int root1,
                         const BipartiteGraph& h2, int root2,
                         const Rational& x, const Rational& y);

struct ConjectureViolation {
  BipartiteGraph graph;
  Rational product;  // T(2,0) * T(0,2)
};

// Random bipartite graphs on at most 10 vertices with minimum degree at least
// |min_degree|, checked for T(2,0) * T(0,2) >= 1 exactly.
std::vector<ConjectureViolation> ConjectureScan(int min_degree, int trials,
                                                std::uint64_t seed);

}  // namespace tuttecert

#endif  // TUTTECERT_PERM_TUTTE_H_
