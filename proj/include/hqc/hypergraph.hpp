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

#ifndef HQC_HYPERGRAPH_HPP
#define HQC_HYPERGRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hqc/group.hpp"

namespace hqc {

using VertexId = int;

/// Hypergraph with disjoint input and output vertex classes and hyperedges
/// of any size from 1 up to the full vertex set. Edges are stored as sorted
/// vertex lists, the edge list itself sorted lexicographically, so equal
/// graphs compare equal structurally. Immutable once built.
///
/// When `implicit_input_adjacency` is set, every input vertex counts as a
/// neighbor of every output vertex (and vice versa) for `neighbors` and
/// `adjacent`, on top of whatever the edge list provides. The declared edge
/// list itself is not changed; `effective_edges` exposes the augmentation as
/// one {input, output} star edge per pair for consumers that need a concrete
/// edge set (state construction, gate counting does not).
class Hypergraph {
 public:
  static Hypergraph create(std::vector<VertexId> inputs,
                           std::vector<VertexId> outputs,
                           std::vector<std::vector<VertexId>> edges,
                           bool implicit_input_adjacency);

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
  bool implicit_input_adjacency() const { return implicit_; }

  bool contains(VertexId v) const;
  bool is_input(VertexId v) const;
  bool is_output(VertexId v) const;

  /// All vertices of X union Y, ascending.
  std::vector<VertexId> all_vertices() const;

  /// True iff the given vertex set is a declared edge (implicit adjacency is
  /// not consulted). Rejects unknown vertices and the empty set.
  bool has_edge(std::vector<VertexId> vertices) const;

  /// Union over edges through v of the edge minus v, plus the implicit
  /// cross-class pairs when the flag is set. Ascending order.
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Pairwise adjacency indicator; symmetric, and false on the diagonal.
  bool adjacent(VertexId a, VertexId b) const;

  /// Declared edges plus, when the flag is set, one {input, output} edge per
  /// cross-class pair not already declared.
  std::vector<std::vector<VertexId>> effective_edges() const;

 private:
  Hypergraph() = default;

  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  std::vector<std::vector<VertexId>> edges_;
  bool implicit_ = false;
  std::map<VertexId, std::set<VertexId>> adjacency_;
};

/// Subset of the output vertices on which channel errors may act.
/// Stored sorted; duplicates are rejected. Membership in a particular
/// graph's output set is checked by the operations that take one.
class ErrorConfiguration {
 public:
  ErrorConfiguration() = default;
  explicit ErrorConfiguration(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  bool contains(VertexId v) const;

 private:
  std::vector<VertexId> vertices_;
};

/// A parsed graph document: the hypergraph plus the modulus declared in the
/// file.
struct GraphFile {
  Hypergraph graph;
  Modulus modulus;
};

/// Parses the canonical JSON graph document. All five keys are required:
/// modulus, inputs, outputs, edges, implicit_input_adjacency. Violated
/// invariants are reported with a one-line message naming the problem.
GraphFile parse_graph(std::string_view text);

/// Canonical serialization: fixed key order, vertex lists ascending, edges
/// sorted lexicographically, compact JSON. Two graph documents are equal
/// iff their canonical serializations are byte-identical.
std::string serialize_graph(const GraphFile& file);

}  // namespace hqc

#endif  // HQC_HYPERGRAPH_HPP
