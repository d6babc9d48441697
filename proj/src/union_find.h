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

#ifndef TUTTECERT_SRC_UNION_FIND_H_
#define TUTTECERT_SRC_UNION_FIND_H_

#include <numeric>
#include <utility>
#include <vector>

namespace tuttecert {

// Union-find with path halving; small and copyable for backtracking.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Returns false when u and v were already joined.
  bool Union(int u, int v) {
    u = Find(u);
    v = Find(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    parent_[v] = u;
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace tuttecert

#endif  // TUTTECERT_SRC_UNION_FIND_H_
