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

#include "hqc/reports.hpp"

#include <algorithm>
#include <numeric>

namespace hqc {

Json graph_json(const GraphFile& file) { return Json::parse(serialize_graph(file)); }

Json tuple_json(const GroupTuple& tuple) {
  Json out = Json::object();
  std::vector<std::size_t> order(tuple.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!tuple.labels().empty()) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return tuple.labels()[a] < tuple.labels()[b];
    });
  }
  for (std::size_t i : order) {
    const int label = tuple.labels().empty() ? static_cast<int>(i) : tuple.labels()[i];
    out[std::to_string(label)] = tuple.value(i);
  }
  return out;
}

Json verdict_json(const ErrorConfiguration& errors, Modulus d,
                  const DetectionVerdict& verdict) {
  Json out;
  out["errors"] = errors.vertices();
  out["modulus"] = d.value();
  out["detected"] = verdict.detected;
  out["witness"] = verdict.witness ? tuple_json(*verdict.witness) : Json(nullptr);
  Json relations = Json::array();
  for (const ForcedRelation& rel : verdict.forced_relations) {
    Json r;
    r["input"] = rel.input;
    r["coefficients"] = rel.coefficients;
    relations.push_back(std::move(r));
  }
  out["forced_relations"] = std::move(relations);
  return out;
}

Json enumeration_json(const GraphFile& file, Modulus d,
                      const EnumerationReport& report) {
  Json out;
  out["graph"] = graph_json(file);
  out["modulus"] = d.value();
  out["size"] = report.size;
  out["total"] = report.total;
  out["detected"] = report.detected_count;
  Json undetected = Json::array();
  for (const EnumerationEntry& entry : report.undetected) {
    Json e;
    e["config"] = entry.config;
    e["witness"] = tuple_json(entry.witness);
    undetected.push_back(std::move(e));
  }
  out["undetected"] = std::move(undetected);
  return out;
}

Json cost_json(const CostReport& report) {
  Json out;
  Json per_edge = Json::array();
  for (const CostReport::Entry& entry : report.per_edge) {
    Json e;
    e["size"] = entry.edge_size;
    e["hyper"] = entry.hyper;
    e["clique"] = entry.clique;
    per_edge.push_back(std::move(e));
  }
  out["per_edge"] = std::move(per_edge);
  out["total_hyper"] = report.total_hyper;
  out["total_clique"] = report.total_clique;
  out["advantage"] = report.advantage;
  return out;
}

Json state_json(const StateVector& state) {
  Json out;
  out["local_dim"] = state.local_dim.value();
  out["sites"] = state.sites;
  Json amps = Json::array();
  for (const auto& a : state.amplitudes) {
    amps.push_back(Json::array({a.real(), a.imag()}));
  }
  out["amplitudes"] = std::move(amps);
  return out;
}

Json oracle_json(const ErrorConfiguration& errors, Modulus d,
                 const FactorizationReport& report) {
  Json out;
  out["errors"] = errors.vertices();
  out["modulus"] = d.value();
  out["factorizes"] = report.factorizes;
  out["max_deviation"] = report.max_deviation;
  if (report.offending_g) {
    Json pair;
    pair["g"] = tuple_json(*report.offending_g);
    pair["h"] = tuple_json(*report.offending_h);
    out["offending"] = std::move(pair);
  } else {
    out["offending"] = nullptr;
  }
  return out;
}

}  // namespace hqc
