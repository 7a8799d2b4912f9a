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

#ifndef HQC_GATECOST_HPP
#define HQC_GATECOST_HPP

#include <vector>

#include "hqc/hypergraph.hpp"

namespace hqc {

/// Two-qubit controlled-Z counts per declared edge, for the multi-controlled
/// realization versus the clique expansion of the same edge.
struct CostReport {
  struct Entry {
    int edge_size;
    long long hyper;
    long long clique;
  };
  std::vector<Entry> per_edge;
  long long total_hyper = 0;
  long long total_clique = 0;
  long long advantage = 0;  // clique minus hyper
};

/// Controlled-Z gates needed to realize one k-site controlled phase: 2k for
/// k >= 3, one for k = 2 (it already is a controlled-Z), zero for k = 1.
long long hyper_cost(int edge_size);

/// Edges of the complete graph on the same k vertices: k(k-1)/2.
long long clique_cost(int edge_size);

/// Cost comparison over the declared edge list.
CostReport compare(const Hypergraph& g);

}  // namespace hqc

#endif  // HQC_GATECOST_HPP
