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

#ifndef TUTTECERT_TUTTE_H_
#define TUTTECERT_TUTTE_H_

#include <vector>

#include "tuttecert/graphs.h"
#include "tuttecert/matroid.h"
#include "tuttecert/polynomial.h"

namespace tuttecert {

// Deletion-contraction, always splitting on the highest-labeled edge that is
// neither a loop nor a bridge. At most 24 edges, else ResourceError.
BivariatePolynomial TutteDeletionContraction(const MultiGraph& graph);

// Corank-nullity subset expansion over the rank oracle. At most 24 elements.
BivariatePolynomial TutteMatroid(const Matroid& matroid);

// Sum over spanning trees of x^ia(T) y^ea(T), where labeling[i] is the label
// given to the edge at position i (a permutation of 1..m). The graph must be
// connected (DomainError) with at most 16 edges (ResourceError).
BivariatePolynomial TutteByActivities(const MultiGraph& graph,
                                      const std::vector<int>& labeling);
BivariatePolynomial TutteByActivities(const MultiGraph& graph);

}  // namespace tuttecert

#endif  // TUTTECERT_TUTTE_H_
