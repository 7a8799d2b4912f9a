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

#include "hqc/fixture.hpp"

namespace hqc {

GraphFile builtin_fixture() {
  std::vector<VertexId> outputs(15);
  for (int i = 0; i < 15; ++i) outputs[i] = i + 1;
  return GraphFile{Hypergraph::create({0}, std::move(outputs),
                                      {{1, 2, 3, 4, 5, 6},
                                       {4, 5, 6, 7, 8, 9},
                                       {7, 8, 9, 10, 11, 12},
                                       {10, 11, 12, 13, 14, 15},
                                       {1, 2, 3, 13, 14, 15}},
                                      /*implicit_input_adjacency=*/true),
                   Modulus(2)};
}

std::string builtin_fixture_text() { return serialize_graph(builtin_fixture()); }

}  // namespace hqc
