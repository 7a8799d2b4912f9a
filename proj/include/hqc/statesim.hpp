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

#ifndef HQC_STATESIM_HPP
#define HQC_STATESIM_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hqc/group.hpp"
#include "hqc/hypergraph.hpp"

namespace hqc {

/// Hard cap on dense statevector length d^n.
inline constexpr std::size_t kMaxStateDimension = std::size_t{1} << 22;

/// Hard cap on isometry size d^(|X|+|Y|).
inline constexpr std::size_t kMaxIsometryDimension = std::size_t{1} << 20;

/// Dense amplitude vector over d^n basis states. Site order is significant:
/// sites[0] is the most significant digit of the basis index.
struct StateVector {
  Modulus local_dim;
  std::vector<VertexId> sites;
  std::vector<std::complex<double>> amplitudes;

  std::size_t dimension() const { return amplitudes.size(); }
  /// Digit of `index` at the given site position.
  int digit(std::size_t index, std::size_t position) const;
};

/// Uniform superposition |+...+> on the given sites.
StateVector plus_state(Modulus d, std::vector<VertexId> sites);

/// Multi-site controlled phase: multiplies each amplitude by w^(product of
/// the digits on `sites`), w = exp(2*pi*i/d). For d = 2 this is the sign
/// flip on the all-ones pattern. An empty site set degenerates to the
/// global scalar w.
StateVector apply_ckz(const StateVector& state, std::span<const VertexId> sites);

/// The state of the graph: |+> everywhere, then one controlled-phase gate
/// per effective edge.
StateVector hypergraph_state(const Hypergraph& g, Modulus d);

/// Checks K_i |state> = |state> where K_i applies a bit flip on site i and,
/// for every effective edge e through i, the controlled phase on e minus i.
/// Qubit graphs only: rejects d != 2.
bool verify_stabilizer(const Hypergraph& g, VertexId i, Modulus d);

/// Codeword for one logical qubit over n+1 sites: logical 0 maps to
/// |0> (x) |graph state|, logical 1 to |1> (x) X-on-every-site of it. The
/// reference register is the first site, labelled -1.
StateVector encode(const Hypergraph& g, int logical);

/// The code map from input assignments to output amplitudes. Entry
/// (g^Y, g^X) carries the product of the edge characters over the effective
/// edges, scaled so every column has unit norm. Columns need not be
/// orthogonal for arbitrary edge sets; `max_isometry_deviation` measures how
/// far V*V sits from the identity.
struct IsometryMatrix {
  Modulus local_dim;
  std::vector<VertexId> row_sites;  // outputs, ascending
  std::vector<VertexId> col_sites;  // inputs, ascending
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<std::complex<double>> entries;  // row-major

  std::complex<double> entry(std::size_t r, std::size_t c) const {
    return entries[r * num_cols + c];
  }
  double max_isometry_deviation() const;
};

IsometryMatrix isometry_matrix(const Hypergraph& g, Modulus d);

/// Result of the factorization test. `factorizes` iff for every error pair
/// the conjugated operator is proportional to the identity on the input
/// register within 1e-7; `max_deviation` is the worst violation seen and the
/// offending pair is kept when the test fails.
struct FactorizationReport {
  bool factorizes;
  double max_deviation;
  std::optional<GroupTuple> offending_g;
  std::optional<GroupTuple> offending_h;
};

/// Brute-force error-detection oracle: for every pair (g^E, h^E) forms
/// F = |g^E><h^E| (x) identity on the clean outputs, conjugates it through
/// the code map, and requires the result to be a scalar on the input
/// register: off-diagonal entries below 1e-7 and diagonal entries mutually
/// equal within 1e-7.
FactorizationReport kl_factorization_check(const Hypergraph& g,
                                           const ErrorConfiguration& errors,
                                           Modulus d);

}  // namespace hqc

#endif  // HQC_STATESIM_HPP
