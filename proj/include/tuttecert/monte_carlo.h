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

#ifndef TUTTECERT_MONTE_CARLO_H_
#define TUTTECERT_MONTE_CARLO_H_

#include <cstdint>

#include "tuttecert/graphs.h"

namespace tuttecert {

struct McEstimate {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(samples)
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  // 0 means MW_THREADS from the environment, else hardware concurrency.
  int workers = 0;
  // Replace each pendant leaf whose neighbor has degree >= 2 by its exact
  // conditional expectation given the neighbor's uniform. Unbiased, with far
  // smaller variance when leaf weights vanish.
  bool integrate_leaves = false;
};

// Estimates the permutation Tutte polynomial at (x, y) by averaging
// x^I(A) y^I(B) over i.i.d. uniform vertex labels. Sample k's uniforms derive
// from (seed, k) alone and blocks are merged in a fixed order, so the result
// does not depend on the worker count. Throws std::invalid_argument for
// negative x or y or samples < 1.
McEstimate PermTutteMc(const BipartiteGraph& graph, double x, double y,
                       std::int64_t samples, std::uint64_t seed,
                       const McOptions& options = {});

// Worker count used when options.workers is 0.
int DefaultWorkerCount();

}  // namespace tuttecert

#endif  // TUTTECERT_MONTE_CARLO_H_
