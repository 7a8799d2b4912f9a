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

#ifndef HQC_DETECTION_HPP
#define HQC_DETECTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "hqc/group.hpp"
#include "hqc/hypergraph.hpp"
#include "hqc/linear.hpp"

namespace hqc {

/// One verified relation sum_{e in E} coefficients[e] * g_e = 0, attached to
/// the input vertex it reads off. Coefficients parallel E ascending.
struct ForcedRelation {
  VertexId input;
  std::vector<int> coefficients;
};

/// Outcome of the detection decision. When undetected, `witness` is the
/// first kernel generator (in deterministic column order) that breaks one of
/// the two conditions. `forced_relations` lists the input-vertex relations
/// that do hold on the whole solution space; when detected that is all of
/// them.
struct DetectionVerdict {
  bool detected;
  std::optional<GroupTuple> witness;
  std::vector<ForcedRelation> forced_relations;
};

/// The linear map sending an assignment on `domain` to its neighbor-sums at
/// each vertex of `codomain`: one row per codomain vertex (ascending), one
/// column per domain vertex (inputs first, then the rest ascending),
/// coefficient 1 where the pair is adjacent.
LinearSystem build_homomorphism(const Hypergraph& g,
                                std::span<const VertexId> domain,
                                std::span<const VertexId> codomain, Modulus d);

/// The check system for an error configuration: domain X union E, codomain
/// the clean vertices I = Y minus E.
LinearSystem build_detection_system(const Hypergraph& g,
                                    const ErrorConfiguration& errors,
                                    Modulus d);

/// Decides detection: every solution of the check system must vanish on the
/// inputs and satisfy the E-to-X neighbor-sum relations. Both conditions are
/// subgroup membership tests, so checking kernel generators suffices.
DetectionVerdict is_detected(const Hypergraph& g,
                             const ErrorConfiguration& errors, Modulus d);

struct EnumerationEntry {
  std::vector<VertexId> config;
  GroupTuple witness;
};

struct EnumerationReport {
  int size = 0;
  long long total = 0;
  long long detected_count = 0;
  std::vector<EnumerationEntry> undetected;
};

/// Runs is_detected over every size-subset of the outputs, in lexicographic
/// order.
EnumerationReport enumerate_detected(const Hypergraph& g, int size, Modulus d);

/// Largest k such that every configuration of at most k errors is detected.
/// 0 when some single error already slips through; -1 when even the empty
/// configuration fails.
int detection_radius(const Hypergraph& g, Modulus d);

}  // namespace hqc

#endif  // HQC_DETECTION_HPP
