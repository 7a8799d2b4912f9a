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

#ifndef HQC_FIXTURE_HPP
#define HQC_FIXTURE_HPP

#include <string>

#include "hqc/hypergraph.hpp"

namespace hqc {

/// Built-in demonstration code: one input, fifteen outputs arranged in five
/// blocks of three, and five six-vertex edges chaining the blocks in a
/// cycle. Implicit input adjacency is on.
GraphFile builtin_fixture();

/// Canonical file bytes of the built-in code.
std::string builtin_fixture_text();

}  // namespace hqc

#endif  // HQC_FIXTURE_HPP
