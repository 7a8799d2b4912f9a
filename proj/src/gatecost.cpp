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

#include "hqc/gatecost.hpp"

#include <stdexcept>
#include <string>

namespace hqc {

long long hyper_cost(int edge_size) {
  if (edge_size <= 0) {
    throw std::invalid_argument("edge size must be positive, got " +
                                std::to_string(edge_size));
  }
  if (edge_size == 1) return 0;
  if (edge_size == 2) return 1;
  return 2LL * edge_size;
}

long long clique_cost(int edge_size) {
  if (edge_size <= 0) {
    throw std::invalid_argument("edge size must be positive, got " +
                                std::to_string(edge_size));
  }
  return static_cast<long long>(edge_size) * (edge_size - 1) / 2;
}

CostReport compare(const Hypergraph& g) {
  CostReport report;
  for (const auto& edge : g.edges()) {
    const int k = static_cast<int>(edge.size());
    const CostReport::Entry entry{k, hyper_cost(k), clique_cost(k)};
    report.total_hyper += entry.hyper;
    report.total_clique += entry.clique;
    report.per_edge.push_back(entry);
  }
  report.advantage = report.total_clique - report.total_hyper;
  return report;
}

}  // namespace hqc
