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

#include "hqc/statesim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hqc {

namespace {

// d^count, or nullopt once the cap is exceeded.
std::optional<std::size_t> checked_power(int d, std::size_t count, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (dim > cap / static_cast<std::size_t>(d)) return std::nullopt;
    dim *= static_cast<std::size_t>(d);
  }
  if (dim > cap) return std::nullopt;
  return dim;
}

std::size_t state_dimension_or_throw(int d, std::size_t sites) {
  auto dim = checked_power(d, sites, kMaxStateDimension);
  if (!dim) {
    throw std::invalid_argument(
        "state too large: " + std::to_string(d) + "^" + std::to_string(sites) +
        " exceeds the cap of 2^22 amplitudes");
  }
  return *dim;
}

std::vector<std::complex<double>> phase_table(Modulus d) {
  std::vector<std::complex<double>> w(d.value());
  for (int e = 0; e < d.value(); ++e) w[e] = root_of_unity(d, e);
  return w;
}

std::size_t site_position(const std::vector<VertexId>& sites, VertexId v) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] == v) return i;
  }
  throw std::invalid_argument("site " + std::to_string(v) +
                              " is not part of the state");
}

// Positions of the erroneous outputs within an ascending output list.
std::vector<std::size_t> positions_of(const std::vector<VertexId>& all,
                                      const std::vector<VertexId>& subset) {
  std::vector<std::size_t> pos;
  pos.reserve(subset.size());
  for (VertexId v : subset) {
    pos.push_back(static_cast<std::size_t>(
        std::lower_bound(all.begin(), all.end(), v) - all.begin()));
  }
  return pos;
}

}  // namespace

int StateVector::digit(std::size_t index, std::size_t position) const {
  std::size_t divisor = 1;
  for (std::size_t i = position + 1; i < sites.size(); ++i) {
    divisor *= static_cast<std::size_t>(local_dim.value());
  }
  return static_cast<int>(index / divisor % static_cast<std::size_t>(local_dim.value()));
}

StateVector plus_state(Modulus d, std::vector<VertexId> sites) {
  const std::size_t dim = state_dimension_or_throw(d.value(), sites.size());
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector{d, std::move(sites), std::vector<std::complex<double>>(dim, amp)};
}

StateVector apply_ckz(const StateVector& state, std::span<const VertexId> sites) {
  std::vector<std::size_t> positions;
  positions.reserve(sites.size());
  for (VertexId v : sites) positions.push_back(site_position(state.sites, v));
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw std::invalid_argument("controlled phase gate repeats a site");
  }

  const int d = state.local_dim.value();
  const auto w = phase_table(state.local_dim);

  // Precompute place values so digits come out with shifts instead of
  // repeated division.
  const std::size_t n = state.sites.size();
  std::vector<std::size_t> place(n, 1);
  for (std::size_t i = n; i-- > 1;) place[i - 1] = place[i] * static_cast<std::size_t>(d);

  StateVector result = state;
  for (std::size_t idx = 0; idx < result.amplitudes.size(); ++idx) {
    long long product = 1;
    for (std::size_t p : positions) {
      product = product * static_cast<long long>(idx / place[p] % static_cast<std::size_t>(d)) % d;
    }
    result.amplitudes[idx] *= w[static_cast<std::size_t>(product)];
  }
  return result;
}

StateVector hypergraph_state(const Hypergraph& g, Modulus d) {
  StateVector state = plus_state(d, g.all_vertices());
  for (const auto& edge : g.effective_edges()) {
    state = apply_ckz(state, edge);
  }
  return state;
}

bool verify_stabilizer(const Hypergraph& g, VertexId i, Modulus d) {
  if (d.value() != 2) {
    throw std::invalid_argument(
        "stabilizer check is defined for modulus 2 only");
  }
  if (!g.contains(i)) {
    throw std::invalid_argument("unknown vertex " + std::to_string(i));
  }

  const StateVector reference = hypergraph_state(g, d);
  StateVector acc = reference;
  for (const auto& edge : g.effective_edges()) {
    if (!std::binary_search(edge.begin(), edge.end(), i)) continue;
    std::vector<VertexId> rest;
    rest.reserve(edge.size() - 1);
    for (VertexId v : edge) {
      if (v != i) rest.push_back(v);
    }
    acc = apply_ckz(acc, rest);
  }

  // Bit flip on site i.
  const std::size_t pos = site_position(acc.sites, i);
  const std::size_t stride = acc.dimension() >> (pos + 1);
  StateVector flipped = acc;
  for (std::size_t idx = 0; idx < acc.dimension(); ++idx) {
    flipped.amplitudes[idx ^ stride] = acc.amplitudes[idx];
  }

  for (std::size_t idx = 0; idx < reference.dimension(); ++idx) {
    if (std::abs(flipped.amplitudes[idx] - reference.amplitudes[idx]) > 1e-9) {
      return false;
    }
  }
  return true;
}

StateVector encode(const Hypergraph& g, int logical) {
  if (logical != 0 && logical != 1) {
    throw std::invalid_argument("logical value must be 0 or 1");
  }
  const Modulus d(2);
  const StateVector base = hypergraph_state(g, d);
  const std::size_t dim = base.dimension();
  if (dim > kMaxStateDimension / 2) {
    throw std::invalid_argument("encoded state exceeds the size cap");
  }

  std::vector<VertexId> sites{-1};
  sites.insert(sites.end(), base.sites.begin(), base.sites.end());
  StateVector result{d, std::move(sites),
                     std::vector<std::complex<double>>(2 * dim, 0.0)};
  if (logical == 0) {
    std::copy(base.amplitudes.begin(), base.amplitudes.end(),
              result.amplitudes.begin());
  } else {
    const std::size_t mask = dim - 1;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      result.amplitudes[dim + (idx ^ mask)] = base.amplitudes[idx];
    }
  }
  return result;
}

double IsometryMatrix::max_isometry_deviation() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < num_cols; ++a) {
    for (std::size_t b = 0; b < num_cols; ++b) {
      std::complex<double> dot = 0.0;
      for (std::size_t r = 0; r < num_rows; ++r) {
        dot += std::conj(entry(r, a)) * entry(r, b);
      }
      if (a == b) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

IsometryMatrix isometry_matrix(const Hypergraph& g, Modulus d) {
  const std::size_t total_sites = g.inputs().size() + g.outputs().size();
  if (!checked_power(d.value(), total_sites, kMaxIsometryDimension)) {
    throw std::invalid_argument(
        "code map too large: " + std::to_string(d.value()) + "^" +
        std::to_string(total_sites) + " exceeds the cap of 2^20 entries");
  }

  IsometryMatrix v{d, g.outputs(), g.inputs(), 0, 0, {}};
  v.num_rows = *checked_power(d.value(), v.row_sites.size(), kMaxIsometryDimension);
  v.num_cols = *checked_power(d.value(), v.col_sites.size(), kMaxIsometryDimension);

  // Each edge becomes a digit-product over positions, tagged with whether
  // the digit comes from the row (output) or column (input) index.
  struct Slot {
    bool from_row;
    std::size_t place;
  };
  const int dd = d.value();
  auto places = [dd](std::size_t count) {
    std::vector<std::size_t> p(count, 1);
    for (std::size_t i = count; i-- > 1;) p[i - 1] = p[i] * static_cast<std::size_t>(dd);
    return p;
  };
  const auto row_place = places(v.row_sites.size());
  const auto col_place = places(v.col_sites.size());

  std::vector<std::vector<Slot>> edge_slots;
  for (const auto& edge : g.effective_edges()) {
    std::vector<Slot> slots;
    slots.reserve(edge.size());
    for (VertexId vertex : edge) {
      if (g.is_output(vertex)) {
        slots.push_back({true, row_place[positions_of(v.row_sites, {vertex})[0]]});
      } else {
        slots.push_back({false, col_place[positions_of(v.col_sites, {vertex})[0]]});
      }
    }
    edge_slots.push_back(std::move(slots));
  }

  const auto w = phase_table(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(v.num_rows));
  v.entries.resize(v.num_rows * v.num_cols);
  for (std::size_t r = 0; r < v.num_rows; ++r) {
    for (std::size_t c = 0; c < v.num_cols; ++c) {
      long long exponent = 0;
      for (const auto& slots : edge_slots) {
        long long product = 1;
        for (const Slot& s : slots) {
          const std::size_t idx = s.from_row ? r : c;
          product = product * static_cast<long long>(idx / s.place % static_cast<std::size_t>(dd)) % dd;
        }
        exponent = (exponent + product) % dd;
      }
      v.entries[r * v.num_cols + c] = w[static_cast<std::size_t>(exponent)] * norm;
    }
  }
  return v;
}

FactorizationReport kl_factorization_check(const Hypergraph& g,
                                           const ErrorConfiguration& errors,
                                           Modulus d) {
  for (VertexId v : errors.vertices()) {
    if (!g.is_output(v)) {
      throw std::invalid_argument("error configuration vertex " +
                                  std::to_string(v) +
                                  " is not an output vertex");
    }
  }
  // Total work is d^(2|X| + |Y| + |E|) complex multiplies; keep it desk-scale.
  const std::size_t work_sites =
      2 * g.inputs().size() + g.outputs().size() + errors.size();
  if (!checked_power(d.value(), work_sites, kMaxStateDimension)) {
    throw std::invalid_argument(
        "factorization check too large: " + std::to_string(d.value()) + "^" +
        std::to_string(work_sites) + " exceeds the cap of 2^22 operations");
  }
  const IsometryMatrix v = isometry_matrix(g, d);
  const int dd = d.value();

  const std::vector<VertexId>& outputs = g.outputs();
  const auto error_pos = positions_of(outputs, errors.vertices());
  std::vector<std::size_t> clean_pos;
  for (std::size_t p = 0; p < outputs.size(); ++p) {
    if (!errors.contains(outputs[p])) clean_pos.push_back(p);
  }

  std::vector<std::size_t> place(outputs.size(), 1);
  for (std::size_t i = outputs.size(); i-- > 1;) {
    place[i - 1] = place[i] * static_cast<std::size_t>(dd);
  }

  // Row-index offsets contributed by each assignment of the error digits and
  // of the clean digits; the two position sets are disjoint so offsets add.
  auto offsets = [&](const std::vector<std::size_t>& pos) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < pos.size(); ++i) count *= static_cast<std::size_t>(dd);
    std::vector<std::size_t> result(count, 0);
    for (std::size_t assign = 0; assign < count; ++assign) {
      std::size_t rest = assign;
      std::size_t offset = 0;
      for (std::size_t i = pos.size(); i-- > 0;) {
        offset += rest % static_cast<std::size_t>(dd) * place[pos[i]];
        rest /= static_cast<std::size_t>(dd);
      }
      result[assign] = offset;
    }
    return result;
  };
  const auto error_offsets = offsets(error_pos);
  const auto clean_offsets = offsets(clean_pos);

  // Digits of an error assignment, most significant first, as a labelled
  // tuple over E.
  auto error_tuple = [&](std::size_t assign) {
    std::vector<int> digits(errors.size(), 0);
    for (std::size_t i = errors.size(); i-- > 0;) {
      digits[i] = static_cast<int>(assign % static_cast<std::size_t>(dd));
      assign /= static_cast<std::size_t>(dd);
    }
    return GroupTuple(d, std::move(digits), errors.vertices());
  };

  FactorizationReport report{true, 0.0, std::nullopt, std::nullopt};
  const std::size_t cols = v.num_cols;
  std::vector<std::complex<double>> m(cols * cols);
  for (std::size_t ge = 0; ge < error_offsets.size(); ++ge) {
    for (std::size_t he = 0; he < error_offsets.size(); ++he) {
      std::fill(m.begin(), m.end(), std::complex<double>(0.0));
      for (std::size_t gi : clean_offsets) {
        const std::size_t bra_row = error_offsets[ge] + gi;
        const std::size_t ket_row = error_offsets[he] + gi;
        for (std::size_t a = 0; a < cols; ++a) {
          const std::complex<double> bra = std::conj(v.entry(bra_row, a));
          for (std::size_t b = 0; b < cols; ++b) {
            m[a * cols + b] += bra * v.entry(ket_row, b);
          }
        }
      }

      double deviation = 0.0;
      for (std::size_t a = 0; a < cols; ++a) {
        for (std::size_t b = 0; b < cols; ++b) {
          if (a != b) {
            deviation = std::max(deviation, std::abs(m[a * cols + b]));
          } else {
            deviation = std::max(deviation, std::abs(m[a * cols + a] - m[0]));
          }
        }
      }
      report.max_deviation = std::max(report.max_deviation, deviation);
      if (deviation > 1e-7 && report.factorizes) {
        report.factorizes = false;
        report.offending_g = error_tuple(ge);
        report.offending_h = error_tuple(he);
      }
    }
  }
  return report;
}

}  // namespace hqc
