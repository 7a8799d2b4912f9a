// Copyright 2026 The hqc Authors
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

#include "hqc/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hqc {

namespace {

std::string vertex_list_str(const std::vector<VertexId>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "]";
}

void require_sorted_unique(std::vector<VertexId>& vs, const char* what) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw std::invalid_argument(std::string(what) + " contains a duplicate vertex");
  }
  for (VertexId v : vs) {
    if (v < 0) {
      throw std::invalid_argument(std::string(what) + " contains negative vertex id " +
                                  std::to_string(v));
    }
  }
}

}  // namespace

Hypergraph Hypergraph::create(std::vector<VertexId> inputs,
                              std::vector<VertexId> outputs,
                              std::vector<std::vector<VertexId>> edges,
                              bool implicit_input_adjacency) {
  Hypergraph g;
  require_sorted_unique(inputs, "inputs");
  require_sorted_unique(outputs, "outputs");

  std::vector<VertexId> overlap;
  std::set_intersection(inputs.begin(), inputs.end(), outputs.begin(),
                        outputs.end(), std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw std::invalid_argument("inputs and outputs overlap at vertex " +
                                std::to_string(overlap.front()));
  }

  g.inputs_ = std::move(inputs);
  g.outputs_ = std::move(outputs);
  g.implicit_ = implicit_input_adjacency;

  const std::size_t vertex_count = g.inputs_.size() + g.outputs_.size();
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge " + vertex_list_str(e) +
                                  " repeats a vertex");
    }
    if (e.empty()) {
      throw std::invalid_argument("edges must contain at least one vertex");
    }
    if (e.size() > vertex_count) {
      throw std::invalid_argument("edge " + vertex_list_str(e) +
                                  " is larger than the vertex set");
    }
    for (VertexId v : e) {
      if (!std::binary_search(g.inputs_.begin(), g.inputs_.end(), v) &&
          !std::binary_search(g.outputs_.begin(), g.outputs_.end(), v)) {
        throw std::invalid_argument("edge vertex " + std::to_string(v) +
                                    " is not declared as input or output");
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge (edges are compared as sets)");
  }
  g.edges_ = std::move(edges);

  for (const auto& e : g.edges_) {
    for (VertexId a : e) {
      for (VertexId b : e) {
        if (a != b) g.adjacency_[a].insert(b);
      }
    }
  }
  return g;
}

bool Hypergraph::contains(VertexId v) const {
  return is_input(v) || is_output(v);
}

bool Hypergraph::is_input(VertexId v) const {
  return std::binary_search(inputs_.begin(), inputs_.end(), v);
}

bool Hypergraph::is_output(VertexId v) const {
  return std::binary_search(outputs_.begin(), outputs_.end(), v);
}

std::vector<VertexId> Hypergraph::all_vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(inputs_.size() + outputs_.size());
  std::merge(inputs_.begin(), inputs_.end(), outputs_.begin(), outputs_.end(),
             std::back_inserter(vs));
  return vs;
}

bool Hypergraph::has_edge(std::vector<VertexId> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) {
    throw std::invalid_argument("edge query needs at least one vertex");
  }
  for (VertexId v : vertices) {
    if (!contains(v)) {
      throw std::invalid_argument("unknown vertex " + std::to_string(v));
    }
  }
  return std::binary_search(edges_.begin(), edges_.end(), vertices);
}

std::vector<VertexId> Hypergraph::neighbors(VertexId v) const {
  if (!contains(v)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  std::set<VertexId> result;
  auto it = adjacency_.find(v);
  if (it != adjacency_.end()) result = it->second;
  if (implicit_) {
    if (is_input(v)) {
      result.insert(outputs_.begin(), outputs_.end());
    } else {
      result.insert(inputs_.begin(), inputs_.end());
    }
  }
  return {result.begin(), result.end()};
}

bool Hypergraph::adjacent(VertexId a, VertexId b) const {
  if (!contains(a)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(a));
  }
  if (!contains(b)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(b));
  }
  if (implicit_ && ((is_input(a) && is_output(b)) || (is_output(a) && is_input(b)))) {
    return true;
  }
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.count(b) > 0;
}

std::vector<std::vector<VertexId>> Hypergraph::effective_edges() const {
  std::vector<std::vector<VertexId>> result = edges_;
  if (implicit_) {
    for (VertexId x : inputs_) {
      for (VertexId y : outputs_) {
        std::vector<VertexId> star{std::min(x, y), std::max(x, y)};
        if (!std::binary_search(edges_.begin(), edges_.end(), star)) {
          result.push_back(std::move(star));
        }
      }
    }
    std::sort(result.begin(), result.end());
  }
  return result;
}

ErrorConfiguration::ErrorConfiguration(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("error configuration repeats a vertex");
  }
}

bool ErrorConfiguration::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

namespace {

using nlohmann::json;

std::vector<VertexId> parse_vertex_list(const json& j, const char* key) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string("graph file: \"") + key +
                                "\" must be an array");
  }
  std::vector<VertexId> vs;
  for (const auto& item : j) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument(std::string("graph file: \"") + key +
                                  "\" must contain integers only");
    }
    vs.push_back(item.get<VertexId>());
  }
  return vs;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph file: invalid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("graph file: top level must be an object");
  }
  for (const char* key :
       {"modulus", "inputs", "outputs", "edges", "implicit_input_adjacency"}) {
    if (!doc.contains(key)) {
      throw std::invalid_argument(std::string("graph file: missing key \"") +
                                  key + "\"");
    }
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "modulus" && key != "inputs" && key != "outputs" &&
        key != "edges" && key != "implicit_input_adjacency") {
      throw std::invalid_argument("graph file: unknown key \"" + key + "\"");
    }
  }

  if (!doc["modulus"].is_number_integer()) {
    throw std::invalid_argument("graph file: \"modulus\" must be an integer");
  }
  const int d = doc["modulus"].get<int>();
  if (d < 2) {
    throw std::invalid_argument("graph file: modulus must be at least 2");
  }

  auto inputs = parse_vertex_list(doc["inputs"], "inputs");
  auto outputs = parse_vertex_list(doc["outputs"], "outputs");

  if (!doc["edges"].is_array()) {
    throw std::invalid_argument("graph file: \"edges\" must be an array");
  }
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : doc["edges"]) {
    edges.push_back(parse_vertex_list(e, "edges"));
  }

  if (!doc["implicit_input_adjacency"].is_boolean()) {
    throw std::invalid_argument(
        "graph file: \"implicit_input_adjacency\" must be a boolean");
  }

  return GraphFile{
      Hypergraph::create(std::move(inputs), std::move(outputs),
                         std::move(edges),
                         doc["implicit_input_adjacency"].get<bool>()),
      Modulus(d)};
}

std::string serialize_graph(const GraphFile& file) {
  nlohmann::ordered_json doc;
  doc["modulus"] = file.modulus.value();
  doc["inputs"] = file.graph.inputs();
  doc["outputs"] = file.graph.outputs();
  doc["edges"] = file.graph.edges();
  doc["implicit_input_adjacency"] = file.graph.implicit_input_adjacency();
  return doc.dump();
}

}  // namespace hqc
