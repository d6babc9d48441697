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

#ifndef TUTTECERT_IO_H_
#define TUTTECERT_IO_H_

#include <string>
#include <string_view>

#include "tuttecert/graphs.h"
#include "tuttecert/matroid.h"

namespace tuttecert {

// {"a_size": 2, "b_size": 3, "edges": [[0, 2], [1, 4]]} with B indices
// absolute. Malformed input raises InputError naming the offending field.
BipartiteGraph ParseBipartiteGraph(const std::string& json_text);
BipartiteGraph LoadBipartiteGraph(const std::string& path);
std::string BipartiteGraphToJson(const BipartiteGraph& graph);

// {"vertices": 4, "edges": [[0, 1], [1, 2]]}; labels follow list order.
MultiGraph ParseMultiGraph(const std::string& json_text);
MultiGraph LoadMultiGraph(const std::string& path);

// "uniform:m,n", "graphic:<path>", "dual(<d>)", "double(<d>)",
// "sum(<d>,<d>)". Raises InputError on malformed descriptors.
Matroid ParseMatroid(std::string_view descriptor);

}  // namespace tuttecert

#endif  // TUTTECERT_IO_H_
