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

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "hqc/detection.hpp"
#include "oracle_util.hpp"

using namespace hqc;
using hqc::testing::closed_form_amplitudes;
using hqc::testing::random_graph;

namespace {

double max_amp_diff(const StateVector& state,
                    const std::vector<std::complex<double>>& expected) {
  double worst = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    worst = std::max(worst, std::abs(state.amplitudes[i] - expected[i]));
  }
  return worst;
}

double norm(const StateVector& state) {
  double sum = 0.0;
  for (const auto& a : state.amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("controlled phase flips the all-ones amplitude") {
  StateVector state = plus_state(Modulus(2), {1, 2});
  state.amplitudes = {0, 0, 0, 1};  // |11>
  const std::vector<VertexId> sites{1, 2};
  const StateVector result = apply_ckz(state, sites);
  CHECK(std::abs(result.amplitudes[3] - std::complex<double>(-1.0)) < 1e-12);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(result.amplitudes[i]) < 1e-12);
}

TEST_CASE("controlled phase is an involution for qubits") {
  StateVector state = plus_state(Modulus(2), {0, 1, 2});
  state.amplitudes = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  const std::vector<VertexId> sites{0, 2};
  const StateVector twice = apply_ckz(apply_ckz(state, sites), sites);
  CHECK(max_amp_diff(twice, state.amplitudes) < 1e-12);
}

TEST_CASE("single-site phase on a qutrit") {
  StateVector state = plus_state(Modulus(3), {1});
  state.amplitudes = {0, 0, 1};  // |2>
  const std::vector<VertexId> sites{1};
  const StateVector result = apply_ckz(state, sites);
  CHECK(std::abs(result.amplitudes[2] - root_of_unity(Modulus(3), 2)) < 1e-12);
}

TEST_CASE("controlled phase applied d times is the identity") {
  for (int d : {2, 3, 4, 5}) {
    StateVector state = plus_state(Modulus(d), {1, 2});
    std::mt19937 rng(d);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (auto& a : state.amplitudes) a = {coef(rng), coef(rng)};
    StateVector result = state;
    const std::vector<VertexId> sites{1, 2};
    for (int i = 0; i < d; ++i) result = apply_ckz(result, sites);
    CHECK(max_amp_diff(result, state.amplitudes) < 1e-12);
  }
}

TEST_CASE("controlled phase rejects repeated or foreign sites") {
  const StateVector state = plus_state(Modulus(2), {1, 2});
  const std::vector<VertexId> repeated{1, 1};
  const std::vector<VertexId> foreign{3};
  CHECK_THROWS_AS(apply_ckz(state, repeated), std::invalid_argument);
  CHECK_THROWS_AS(apply_ckz(state, foreign), std::invalid_argument);
}

TEST_CASE("graph state of a single pair edge") {
  const Hypergraph g = Hypergraph::create({}, {1, 2}, {{1, 2}}, false);
  const StateVector state = hypergraph_state(g, Modulus(2));
  CHECK(std::abs(state.amplitudes[0] - 0.5) < 1e-12);
  CHECK(std::abs(state.amplitudes[1] - 0.5) < 1e-12);
  CHECK(std::abs(state.amplitudes[2] - 0.5) < 1e-12);
  CHECK(std::abs(state.amplitudes[3] + 0.5) < 1e-12);
}

TEST_CASE("graph state of a three-vertex edge") {
  const Hypergraph g = Hypergraph::create({}, {1, 2, 3}, {{1, 2, 3}}, false);
  const StateVector state = hypergraph_state(g, Modulus(2));
  const double amp = 1.0 / std::sqrt(8.0);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(std::abs(state.amplitudes[i] - amp) < 1e-12);
  }
  CHECK(std::abs(state.amplitudes[7] + amp) < 1e-12);
}

TEST_CASE("edgeless graph state is the uniform superposition") {
  const Hypergraph g = Hypergraph::create({}, {1, 2, 3, 4}, {}, false);
  const StateVector state = hypergraph_state(g, Modulus(3));
  const double amp = 1.0 / std::sqrt(81.0);
  for (const auto& a : state.amplitudes) CHECK(std::abs(a - amp) < 1e-12);
}

TEST_CASE("gate construction matches the closed amplitude formula") {
  std::mt19937 rng(20260805);
  std::uniform_int_distribution<int> num_outputs(1, 8);
  std::uniform_int_distribution<int> num_inputs(0, 2);
  std::uniform_int_distribution<int> dim(2, 3);
  std::uniform_int_distribution<int> flag(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph g = random_graph(rng, num_inputs(rng), num_outputs(rng), 8,
                                      flag(rng) == 1);
    const Modulus d(dim(rng));
    const StateVector state = hypergraph_state(g, d);
    CHECK(max_amp_diff(state, closed_form_amplitudes(g, d)) < 1e-12);
    CHECK(std::abs(norm(state) - 1.0) < 1e-9);
  }
}

TEST_CASE("stabilizers of small graphs") {
  SUBCASE("pair edge") {
    const Hypergraph g = Hypergraph::create({}, {1, 2}, {{1, 2}}, false);
    CHECK(verify_stabilizer(g, 1, Modulus(2)));
    CHECK(verify_stabilizer(g, 2, Modulus(2)));
  }
  SUBCASE("three-vertex edge, checked against the closed form") {
    const Hypergraph g = Hypergraph::create({}, {1, 2, 3}, {{1, 2, 3}}, false);
    // Independent route: amp(g1, 1-g2, g3) must equal (-1)^(g1 g3) amp(g).
    const auto amps = closed_form_amplitudes(g, Modulus(2));
    for (std::size_t idx = 0; idx < 8; ++idx) {
      const int g1 = static_cast<int>(idx >> 2) & 1;
      const int g3 = static_cast<int>(idx) & 1;
      const std::size_t flipped = idx ^ 2u;
      const double sign = (g1 * g3) ? -1.0 : 1.0;
      CHECK(std::abs(amps[flipped] - sign * amps[idx]) < 1e-12);
    }
    CHECK(verify_stabilizer(g, 2, Modulus(2)));
  }
  SUBCASE("two chained six-vertex edges on nine sites") {
    const Hypergraph g = Hypergraph::create(
        {}, {1, 2, 3, 4, 5, 6, 7, 8, 9},
        {{1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}}, false);
    for (VertexId v : g.all_vertices()) CHECK(verify_stabilizer(g, v, Modulus(2)));
  }
  SUBCASE("isolated vertex has a bare bit-flip stabilizer") {
    const Hypergraph g = Hypergraph::create({}, {1, 2}, {{2}}, false);
    CHECK(verify_stabilizer(g, 1, Modulus(2)));
    CHECK(verify_stabilizer(g, 2, Modulus(2)));  // size-1 edge contributes -1
  }
  SUBCASE("qudit graphs are rejected") {
    const Hypergraph g = Hypergraph::create({}, {1, 2}, {{1, 2}}, false);
    CHECK_THROWS_AS(verify_stabilizer(g, 1, Modulus(3)), std::invalid_argument);
  }
}

TEST_CASE("encoding splits the logical values orthogonally") {
  SUBCASE("edgeless single vertex") {
    const Hypergraph g = Hypergraph::create({}, {1}, {}, false);
    const StateVector zero = encode(g, 0);
    const StateVector one = encode(g, 1);
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(zero.amplitudes[0] - amp) < 1e-12);
    CHECK(std::abs(zero.amplitudes[1] - amp) < 1e-12);
    CHECK(std::abs(one.amplitudes[2] - amp) < 1e-12);
    CHECK(std::abs(one.amplitudes[3] - amp) < 1e-12);
    CHECK(zero.sites.front() == -1);
  }
  SUBCASE("pair edge codewords are orthonormal") {
    const Hypergraph g = Hypergraph::create({}, {1, 2}, {{1, 2}}, false);
    const StateVector zero = encode(g, 0);
    const StateVector one = encode(g, 1);
    std::complex<double> overlap = 0.0;
    for (std::size_t i = 0; i < zero.dimension(); ++i) {
      overlap += std::conj(zero.amplitudes[i]) * one.amplitudes[i];
    }
    CHECK(std::abs(overlap) < 1e-12);
    CHECK(std::abs(norm(zero) - 1.0) < 1e-9);
    CHECK(std::abs(norm(one) - 1.0) < 1e-9);
  }
  SUBCASE("logical value must be a bit") {
    const Hypergraph g = Hypergraph::create({}, {1}, {}, false);
    CHECK_THROWS_AS(encode(g, 2), std::invalid_argument);
  }
}

TEST_CASE("code map of the two-vertex code") {
  const Hypergraph g = Hypergraph::create({0}, {1}, {{0, 1}}, false);
  const IsometryMatrix v = isometry_matrix(g, Modulus(2));
  const double amp = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v.entry(0, 0) - amp) < 1e-12);
  CHECK(std::abs(v.entry(0, 1) - amp) < 1e-12);
  CHECK(std::abs(v.entry(1, 0) - amp) < 1e-12);
  CHECK(std::abs(v.entry(1, 1) + amp) < 1e-12);
  CHECK(v.max_isometry_deviation() < 1e-9);
}

TEST_CASE("code map of the edgeless two-vertex graph is constant") {
  const Hypergraph g = Hypergraph::create({0}, {1}, {}, false);
  const IsometryMatrix v = isometry_matrix(g, Modulus(2));
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(v.entry(r, c) - amp) < 1e-12);
    }
  }
  // Identical columns: this map is not an isometry, and the deviation says so.
  CHECK(v.max_isometry_deviation() > 0.9);
}

TEST_CASE("factorization oracle on small codes") {
  SUBCASE("triangle of input-sharing edges, one error") {
    const Hypergraph g = Hypergraph::create(
        {0}, {1, 2, 3}, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}}, false);
    const FactorizationReport report =
        kl_factorization_check(g, ErrorConfiguration({1}), Modulus(2));
    CHECK_FALSE(report.factorizes);
    CHECK(report.offending_g.has_value());
    CHECK_FALSE(
        is_detected(g, ErrorConfiguration({1}), Modulus(2)).detected);
  }
  SUBCASE("same code, empty configuration factorizes") {
    const Hypergraph g = Hypergraph::create(
        {0}, {1, 2, 3}, {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}}, false);
    const FactorizationReport report =
        kl_factorization_check(g, ErrorConfiguration{}, Modulus(2));
    CHECK(report.factorizes);
    CHECK(report.max_deviation <= 1e-7);
  }
  SUBCASE("two-vertex code fails on its single error") {
    const Hypergraph g = Hypergraph::create({0}, {1}, {{0, 1}}, false);
    const FactorizationReport report =
        kl_factorization_check(g, ErrorConfiguration({1}), Modulus(2));
    CHECK_FALSE(report.factorizes);
  }
}

TEST_CASE("size caps are enforced with explicit messages") {
  std::vector<VertexId> outputs(23);
  for (int i = 0; i < 23; ++i) outputs[i] = i + 1;
  const Hypergraph big = Hypergraph::create({}, outputs, {}, false);
  CHECK_THROWS_WITH_AS(hypergraph_state(big, Modulus(2)),
                       "state too large: 2^23 exceeds the cap of 2^22 amplitudes",
                       std::invalid_argument);

  std::vector<VertexId> medium(20);
  for (int i = 0; i < 20; ++i) medium[i] = i + 1;
  const Hypergraph wide = Hypergraph::create({0}, medium, {}, false);
  CHECK_THROWS_AS(isometry_matrix(wide, Modulus(2)), std::invalid_argument);
}
