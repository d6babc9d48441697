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

#include "tuttecert/matroid.h"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>
#include <utility>

#include "tuttecert/errors.h"

namespace tuttecert {

namespace {

ElementSet LowMask(int bits) {
  return bits >= 64 ? ~ElementSet{0} : (ElementSet{1} << bits) - 1;
}

// Calls visit(mask) for every k-subset of [0, n) in increasing mask order.
template <typename Visit>
void ForEachSubsetOfSize(int n, int k, Visit visit) {
  if (k > n) return;
  if (k == 0) {
    visit(ElementSet{0});
    return;
  }
  ElementSet s = LowMask(k);
  const ElementSet limit = ElementSet{1} << n;
  while (s < limit) {
    visit(s);
    // Gosper's hack.
    const ElementSet c = s & -s;
    const ElementSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

Matroid::Matroid(int ground_size, RankFn rank, std::string descriptor)
    : ground_size_(ground_size), rank_(std::move(rank)),
      descriptor_(std::move(descriptor)) {
  if (ground_size < 0 || ground_size > 64) {
    throw std::invalid_argument("ground set size must lie in [0, 64]");
  }
  full_rank_ = rank_(GroundSet());
}

ElementSet Matroid::GroundSet() const { return LowMask(ground_size_); }

bool Matroid::IsIndependent(ElementSet s) const {
  return Rank(s) == Cardinality(s);
}

bool Matroid::IsBasis(ElementSet s) const {
  return (s & ~GroundSet()) == 0 && Cardinality(s) == full_rank_ &&
         Rank(s) == full_rank_;
}

Matroid Uniform(int m, int n) {
  if (m < 0 || n < 0 || n > m) {
    throw std::invalid_argument("uniform matroid needs 0 <= n <= m");
  }
  return Matroid(
      m, [n](ElementSet s) { return std::min(Cardinality(s), n); },
      "uniform:" + std::to_string(m) + "," + std::to_string(n));
}

Matroid CycleMatroid(const MultiGraph& graph) {
  auto shared = std::make_shared<const MultiGraph>(graph);
  return Matroid(
      graph.edge_count(),
      [shared](ElementSet s) {
        return shared->vertex_count() - shared->ComponentCount(s);
      },
      "graphic");
}

Matroid Dual(const Matroid& m) {
  const ElementSet ground = m.GroundSet();
  const int full = m.FullRank();
  return Matroid(
      m.ground_size(),
      [m, ground, full](ElementSet s) {
        return Cardinality(s) - full + m.Rank(ground & ~s);
      },
      "dual(" + m.descriptor() + ")");
}

Matroid ParallelDouble(const Matroid& m) {
  const int size = m.ground_size();
  if (2 * size > 64) throw std::invalid_argument("doubled ground set too large");
  return Matroid(
      2 * size,
      [m, size](ElementSet s) {
        ElementSet projected = 0;
        for (int i = 0; i < size; ++i) {
          if ((s >> (2 * i)) & 3u) projected |= ElementSet{1} << i;
        }
        return m.Rank(projected);
      },
      "double(" + m.descriptor() + ")");
}

Matroid DirectSum(const Matroid& m, const Matroid& n) {
  const int shift = m.ground_size();
  if (shift + n.ground_size() > 64) {
    throw std::invalid_argument("direct sum ground set too large");
  }
  const ElementSet low = m.GroundSet();
  return Matroid(
      shift + n.ground_size(),
      [m, n, low, shift](ElementSet s) {
        return m.Rank(s & low) + n.Rank(shift >= 64 ? 0 : s >> shift);
      },
      "sum(" + m.descriptor() + "," + n.descriptor() + ")");
}

std::vector<ElementSet> Bases(const Matroid& m) {
  if (m.ground_size() > 24) {
    throw ResourceError("basis enumeration is limited to 24 elements");
  }
  std::vector<ElementSet> bases;
  ForEachSubsetOfSize(m.ground_size(), m.FullRank(), [&](ElementSet s) {
    if (m.Rank(s) == m.FullRank()) bases.push_back(s);
  });
  return bases;
}

std::vector<ElementSet> Circuits(const Matroid& m) {
  if (m.ground_size() > 20) {
    throw ResourceError("circuit enumeration is limited to 20 elements");
  }
  std::vector<ElementSet> circuits;
  for (int k = 1; k <= std::min(m.ground_size(), m.FullRank() + 1); ++k) {
    ForEachSubsetOfSize(m.ground_size(), k, [&](ElementSet s) {
      if (m.Rank(s) != k - 1) return;
      for (ElementSet rest = s; rest; rest &= rest - 1) {
        if (m.Rank(s & ~(rest & -rest)) != k - 1) return;
      }
      circuits.push_back(s);
    });
  }
  return circuits;
}

bool HasLoop(const Matroid& m) {
  for (int e = 0; e < m.ground_size(); ++e) {
    if (m.Rank(ElementSet{1} << e) == 0) return true;
  }
  return false;
}

bool HasColoop(const Matroid& m) {
  const ElementSet ground = m.GroundSet();
  for (int e = 0; e < m.ground_size(); ++e) {
    if (m.Rank(ground & ~(ElementSet{1} << e)) < m.FullRank()) return true;
  }
  return false;
}

BipartiteGraph LocalBasisExchange(const Matroid& m, ElementSet basis) {
  if (!m.IsBasis(basis)) throw DomainError("the given set is not a basis");
  const std::vector<int> inside = Elements(basis);
  const std::vector<int> outside = Elements(m.GroundSet() & ~basis);
  const int a = static_cast<int>(inside.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < static_cast<int>(outside.size()); ++j) {
      const ElementSet swapped =
          (basis & ~(ElementSet{1} << inside[i])) | ElementSet{1} << outside[j];
      if (m.Rank(swapped) == m.FullRank()) edges.emplace_back(i, a + j);
    }
  }
  return BipartiteGraph(a, static_cast<int>(outside.size()), edges);
}

ElementSet FundamentalCircuit(const Matroid& m, ElementSet basis, int f) {
  if (f < 0 || f >= m.ground_size()) {
    throw std::invalid_argument("element out of range");
  }
  if (basis >> f & 1u) throw std::invalid_argument("element lies in the basis");
  if (!m.IsBasis(basis)) throw DomainError("the given set is not a basis");
  ElementSet circuit = ElementSet{1} << f;
  for (int e : Elements(basis)) {
    const ElementSet swapped = (basis & ~(ElementSet{1} << e)) | ElementSet{1} << f;
    if (m.Rank(swapped) == m.FullRank()) circuit |= ElementSet{1} << e;
  }
  return circuit;
}

std::vector<int> Elements(ElementSet s) {
  std::vector<int> elements;
  for (; s; s &= s - 1) elements.push_back(std::countr_zero(s));
  return elements;
}

int Cardinality(ElementSet s) { return std::popcount(s); }

}  // namespace tuttecert
