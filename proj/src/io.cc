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

#include "tuttecert/io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tuttecert/errors.h"

namespace tuttecert {

namespace {

using nlohmann::json;

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int IntegerField(const json& object, const std::string& key) {
  if (!object.is_object()) throw InputError("top level: expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) throw InputError("field '" + key + "': missing");
  if (!it->is_number_integer()) {
    throw InputError("field '" + key + "': expected an integer");
  }
  return it->get<int>();
}

std::vector<std::pair<int, int>> EdgeList(const json& object) {
  auto it = object.find("edges");
  if (it == object.end()) throw InputError("field 'edges': missing");
  if (!it->is_array()) throw InputError("field 'edges': expected an array");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < it->size(); ++i) {
    const json& pair = (*it)[i];
    const std::string where = "field 'edges[" + std::to_string(i) + "]'";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InputError(where + ": expected a pair of integers");
    }
    edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return edges;
}

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  Matroid ParseAll() {
    Matroid m = Parse();
    if (pos_ != text_.size()) Fail("unexpected trailing text");
    return m;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("matroid descriptor '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  bool Consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("expected '" + std::string(token) + "'");
  }

  int Integer() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Matroid Parse() {
    if (Consume("uniform:")) {
      const int m = Integer();
      Expect(",");
      const int n = Integer();
      if (n > m) Fail("uniform:m,n needs n <= m");
      return Uniform(m, n);
    }
    if (Consume("graphic:")) {
      const size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      if (start == pos_) Fail("expected a file path");
      const std::string path(text_.substr(start, pos_ - start));
      Matroid m = CycleMatroid(LoadMultiGraph(path));
      return Matroid(m.ground_size(), [m](ElementSet s) { return m.Rank(s); },
                     "graphic:" + path);
    }
    if (Consume("dual(")) {
      Matroid inner = Parse();
      Expect(")");
      return Dual(inner);
    }
    if (Consume("double(")) {
      Matroid inner = Parse();
      Expect(")");
      return ParallelDouble(inner);
    }
    if (Consume("sum(")) {
      Matroid left = Parse();
      Expect(",");
      Matroid right = Parse();
      Expect(")");
      return DirectSum(left, right);
    }
    Fail("expected uniform:, graphic:, dual(, double( or sum(");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

BipartiteGraph ParseBipartiteGraph(const std::string& json_text) {
  const json doc = ParseJson(json_text);
  const int a = IntegerField(doc, "a_size");
  const int b = IntegerField(doc, "b_size");
  if (a < 0) throw InputError("field 'a_size': must be non-negative");
  if (b < 0) throw InputError("field 'b_size': must be non-negative");
  const auto edges = EdgeList(doc);
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "field 'edges[" + std::to_string(i) + "]'";
    if (edges[i].first < 0 || edges[i].first >= a) {
      throw InputError(where + ": first entry must be an A index in [0, a_size)");
    }
    if (edges[i].second < a || edges[i].second >= a + b) {
      throw InputError(where +
                       ": second entry must be a B index in [a_size, a_size + b_size)");
    }
  }
  try {
    return BipartiteGraph(a, b, edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("field 'edges': ") + e.what());
  }
}

BipartiteGraph LoadBipartiteGraph(const std::string& path) {
  return ParseBipartiteGraph(ReadFile(path));
}

std::string BipartiteGraphToJson(const BipartiteGraph& graph) {
  json doc;
  doc["a_size"] = graph.a_size();
  doc["b_size"] = graph.b_size();
  doc["edges"] = json::array();
  for (const auto& [i, j] : graph.Edges()) doc["edges"].push_back({i, j});
  return doc.dump();
}

MultiGraph ParseMultiGraph(const std::string& json_text) {
  const json doc = ParseJson(json_text);
  const int n = IntegerField(doc, "vertices");
  if (n < 0) throw InputError("field 'vertices': must be non-negative");
  const auto edges = EdgeList(doc);
  if (edges.size() > 64) throw InputError("field 'edges': at most 64 edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first < 0 || edges[i].first >= n || edges[i].second < 0 ||
        edges[i].second >= n) {
      throw InputError("field 'edges[" + std::to_string(i) +
                       "]': endpoints must lie in [0, vertices)");
    }
  }
  return MultiGraph(n, edges);
}

MultiGraph LoadMultiGraph(const std::string& path) {
  return ParseMultiGraph(ReadFile(path));
}

Matroid ParseMatroid(std::string_view descriptor) {
  return DescriptorParser(descriptor).ParseAll();
}

}  // namespace tuttecert
