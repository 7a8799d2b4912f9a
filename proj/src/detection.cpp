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

#include "hqc/detection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hqc {

namespace {

// Domain columns in canonical order: inputs ascending, then the rest
// ascending.
std::vector<VertexId> canonical_columns(const Hypergraph& g,
                                        std::span<const VertexId> domain) {
  std::vector<VertexId> ins, rest;
  for (VertexId v : domain) {
    (g.is_input(v) ? ins : rest).push_back(v);
  }
  std::sort(ins.begin(), ins.end());
  std::sort(rest.begin(), rest.end());
  ins.insert(ins.end(), rest.begin(), rest.end());
  return ins;
}

void validate_errors(const Hypergraph& g, const ErrorConfiguration& errors) {
  for (VertexId v : errors.vertices()) {
    if (!g.is_output(v)) {
      throw std::invalid_argument("error configuration vertex " +
                                  std::to_string(v) +
                                  " is not an output vertex");
    }
  }
}

}  // namespace

LinearSystem build_homomorphism(const Hypergraph& g,
                                std::span<const VertexId> domain,
                                std::span<const VertexId> codomain, Modulus d) {
  for (VertexId v : domain) {
    if (!g.contains(v)) {
      throw std::invalid_argument("unknown domain vertex " + std::to_string(v));
    }
  }
  std::vector<VertexId> row_labels(codomain.begin(), codomain.end());
  std::sort(row_labels.begin(), row_labels.end());
  for (VertexId v : row_labels) {
    if (!g.contains(v)) {
      throw std::invalid_argument("unknown codomain vertex " + std::to_string(v));
    }
  }

  LinearSystem sys{canonical_columns(g, domain), std::move(row_labels), {}, d};
  sys.rows.reserve(sys.row_labels.size());
  for (VertexId check : sys.row_labels) {
    std::vector<int> row(sys.columns.size(), 0);
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      row[c] = g.adjacent(sys.columns[c], check) ? 1 : 0;
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

LinearSystem build_detection_system(const Hypergraph& g,
                                    const ErrorConfiguration& errors,
                                    Modulus d) {
  validate_errors(g, errors);
  std::vector<VertexId> domain = g.inputs();
  domain.insert(domain.end(), errors.vertices().begin(), errors.vertices().end());
  std::vector<VertexId> clean;
  std::set_difference(g.outputs().begin(), g.outputs().end(),
                      errors.vertices().begin(), errors.vertices().end(),
                      std::back_inserter(clean));
  return build_homomorphism(g, domain, clean, d);
}

DetectionVerdict is_detected(const Hypergraph& g,
                             const ErrorConfiguration& errors, Modulus d) {
  const LinearSystem sys = build_detection_system(g, errors, d);
  const KernelBasis basis = kernel_mod_d(sys);

  const std::size_t num_inputs = g.inputs().size();
  const std::size_t num_errors = errors.size();

  // Rows of the E-to-X map, one per input vertex.
  std::vector<ForcedRelation> relations;
  relations.reserve(num_inputs);
  for (std::size_t x = 0; x < num_inputs; ++x) {
    std::vector<int> coeffs(num_errors, 0);
    for (std::size_t e = 0; e < num_errors; ++e) {
      coeffs[e] = g.adjacent(errors.vertices()[e], g.inputs()[x]) ? 1 : 0;
    }
    relations.push_back({g.inputs()[x], std::move(coeffs)});
  }

  auto relation_sum = [&](const ForcedRelation& rel, const GroupTuple& gen) {
    long long sum = 0;
    for (std::size_t e = 0; e < num_errors; ++e) {
      sum += static_cast<long long>(rel.coefficients[e]) *
             gen.value(num_inputs + e);
    }
    return static_cast<int>(sum % d.value());
  };

  DetectionVerdict verdict{true, std::nullopt, {}};
  for (const GroupTuple& gen : basis.generators) {
    bool inputs_zero = true;
    for (std::size_t x = 0; x < num_inputs; ++x) {
      if (gen.value(x) != 0) {
        inputs_zero = false;
        break;
      }
    }
    bool relations_hold = true;
    for (const ForcedRelation& rel : relations) {
      if (relation_sum(rel, gen) != 0) {
        relations_hold = false;
        break;
      }
    }
    if (!inputs_zero || !relations_hold) {
      verdict.detected = false;
      verdict.witness = gen;
      break;
    }
  }

  for (ForcedRelation& rel : relations) {
    bool holds = true;
    for (const GroupTuple& gen : basis.generators) {
      if (relation_sum(rel, gen) != 0) {
        holds = false;
        break;
      }
    }
    if (holds) verdict.forced_relations.push_back(std::move(rel));
  }
  return verdict;
}

EnumerationReport enumerate_detected(const Hypergraph& g, int size, Modulus d) {
  const int ny = static_cast<int>(g.outputs().size());
  if (size < 0 || size > ny) {
    throw std::invalid_argument("configuration size must be between 0 and " +
                                std::to_string(ny));
  }

  EnumerationReport report;
  report.size = size;

  // Lexicographic subsets of the (sorted) output list.
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::vector<VertexId> config(size);
    for (int i = 0; i < size; ++i) config[i] = g.outputs()[pick[i]];
    DetectionVerdict verdict = is_detected(g, ErrorConfiguration(config), d);
    ++report.total;
    if (verdict.detected) {
      ++report.detected_count;
    } else {
      report.undetected.push_back({std::move(config), *std::move(verdict.witness)});
    }

    int i = size - 1;
    while (i >= 0 && pick[i] == ny - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return report;
}

int detection_radius(const Hypergraph& g, Modulus d) {
  const int ny = static_cast<int>(g.outputs().size());
  for (int size = 0; size <= ny; ++size) {
    if (enumerate_detected(g, size, d).undetected.size() > 0) {
      return size - 1;
    }
  }
  return ny;
}

}  // namespace hqc
