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

#ifndef TUTTECERT_MATROID_H_
#define TUTTECERT_MATROID_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tuttecert/graphs.h"

namespace tuttecert {

// Element subsets are bitmasks: bit e selects element e (0-based).
using ElementSet = std::uint64_t;

// A matroid given by its ground-set size and a rank oracle.
class Matroid {
 public:
  using RankFn = std::function<int(ElementSet)>;

  Matroid(int ground_size, RankFn rank, std::string descriptor);

  int ground_size() const { return ground_size_; }
  const std::string& descriptor() const { return descriptor_; }
  ElementSet GroundSet() const;

  int Rank(ElementSet s) const { return rank_(s); }
  int FullRank() const { return full_rank_; }
  bool IsIndependent(ElementSet s) const;
  bool IsBasis(ElementSet s) const;

 private:
  int ground_size_;
  RankFn rank_;
  std::string descriptor_;
  int full_rank_;
};

// U_{m,n}: rank(S) = min(|S|, n).
Matroid Uniform(int m, int n);
// Element e is the edge labeled e + 1.
Matroid CycleMatroid(const MultiGraph& graph);
// rank*(S) = |S| - r(E) + r(E \ S).
Matroid Dual(const Matroid& m);
// Element i becomes the parallel pair {2i, 2i + 1}.
Matroid ParallelDouble(const Matroid& m);
// Elements of n follow those of m.
Matroid DirectSum(const Matroid& m, const Matroid& n);

// Enumerations in increasing mask order within each size. Bases require
// ground_size <= 24 and circuits ground_size <= 20; otherwise ResourceError.
std::vector<ElementSet> Bases(const Matroid& m);
std::vector<ElementSet> Circuits(const Matroid& m);

bool HasLoop(const Matroid& m);
bool HasColoop(const Matroid& m);

// H[A]: part A lists the basis elements in increasing order, part B the
// remaining elements in increasing order; e ~ f iff A - e + f is a basis.
// Throws DomainError when |basis| is not a basis.
BipartiteGraph LocalBasisExchange(const Matroid& m, ElementSet basis);

// The unique circuit inside basis + f. Throws std::invalid_argument if f is in
// the basis and DomainError if |basis| is not a basis.
ElementSet FundamentalCircuit(const Matroid& m, ElementSet basis, int f);

// Element indices of a mask, ascending.
std::vector<int> Elements(ElementSet s);
int Cardinality(ElementSet s);

}  // namespace tuttecert

#endif  // TUTTECERT_MATROID_H_
