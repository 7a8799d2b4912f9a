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

#ifndef HQC_REPORTS_HPP
#define HQC_REPORTS_HPP

#include <string>

#include "json.hpp"

#include "hqc/detection.hpp"
#include "hqc/gatecost.hpp"
#include "hqc/group.hpp"
#include "hqc/hypergraph.hpp"
#include "hqc/statesim.hpp"

namespace hqc {

using Json = nlohmann::ordered_json;

/// Canonical graph document as a JSON object (same content as
/// serialize_graph).
Json graph_json(const GraphFile& file);

/// Labelled tuple as {"vertex": value, ...}, keys ascending.
Json tuple_json(const GroupTuple& tuple);

Json verdict_json(const ErrorConfiguration& errors, Modulus d,
                  const DetectionVerdict& verdict);

Json enumeration_json(const GraphFile& file, Modulus d,
                      const EnumerationReport& report);

Json cost_json(const CostReport& report);

Json state_json(const StateVector& state);

Json oracle_json(const ErrorConfiguration& errors, Modulus d,
                 const FactorizationReport& report);

}  // namespace hqc

#endif  // HQC_REPORTS_HPP
