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

#include "hqc/linear.hpp"

#include <random>

#include "doctest.h"

#include "oracle_util.hpp"

using namespace hqc;
using hqc::testing::brute_force_kernel;
using hqc::testing::spanned_subgroup;

namespace {

LinearSystem make_system(int d, std::vector<std::vector<int>> rows, int cols) {
  std::vector<VertexId> columns(cols);
  for (int i = 0; i < cols; ++i) columns[i] = i;
  std::vector<VertexId> labels(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) labels[i] = 100 + static_cast<int>(i);
  return LinearSystem{columns, labels, std::move(rows), Modulus(d)};
}

}  // namespace

TEST_CASE("kernel of [2] over Z_4 is generated by (2)") {
  const auto basis = kernel_mod_d(make_system(4, {{2}}, 1));
  REQUIRE(basis.generators.size() == 1);
  CHECK(basis.generators[0].values() == std::vector<int>{2});
}

TEST_CASE("kernel of [1 1] over Z_2 is generated by (1,1)") {
  const auto basis = kernel_mod_d(make_system(2, {{1, 1}}, 2));
  REQUIRE(basis.generators.size() == 1);
  CHECK(basis.generators[0].values() == std::vector<int>{1, 1});
}

TEST_CASE("vacuous system yields the standard basis, first column first") {
  const auto basis = kernel_mod_d(make_system(2, {}, 3));
  REQUIRE(basis.generators.size() == 3);
  CHECK(basis.generators[0].values() == std::vector<int>{1, 0, 0});
  CHECK(basis.generators[1].values() == std::vector<int>{0, 1, 0});
  CHECK(basis.generators[2].values() == std::vector<int>{0, 0, 1});
}

TEST_CASE("elimination rejects composite moduli") {
  CHECK_THROWS_AS(kernel_elimination(make_system(4, {{1}}, 1)),
                  std::invalid_argument);
}

TEST_CASE("smith decomposition invariants on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long long> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
    for (auto& row : a) {
      for (auto& x : row) x = entry(rng);
    }
    const SmithDecomposition snf = smith_normal_form(a);

    // left * a * right == diag
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long long sum = 0;
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            sum += snf.left[i][k] * a[k][l] * snf.right[l][j];
          }
        }
        CHECK(sum == snf.diag[i][j]);
        if (i != j) CHECK(snf.diag[i][j] == 0);
      }
    }
    // Nonnegative diagonal, divisibility chain.
    for (std::size_t i = 0; i + 1 < std::min(m, n); ++i) {
      CHECK(snf.diag[i][i] >= 0);
      if (snf.diag[i][i] != 0) CHECK(snf.diag[i + 1][i + 1] % snf.diag[i][i] == 0);
      if (snf.diag[i][i] == 0) CHECK(snf.diag[i + 1][i + 1] == 0);
    }
  }
}

TEST_CASE("elimination and smith agree with brute force on 0/1 systems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> cols(1, 5);
  std::uniform_int_distribution<int> rows(0, 6);
  std::uniform_int_distribution<int> bit(0, 1);

  for (int d : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 150; ++trial) {
      const int n = cols(rng), m = rows(rng);
      std::vector<std::vector<int>> matrix(m, std::vector<int>(n));
      for (auto& row : matrix) {
        for (auto& x : row) x = bit(rng);
      }
      const LinearSystem sys = make_system(d, matrix, n);
      const auto expected = brute_force_kernel(sys);

      CHECK(spanned_subgroup(kernel_smith(sys), n) == expected);
      if (sys.modulus.is_prime()) {
        CHECK(spanned_subgroup(kernel_elimination(sys), n) == expected);
      }
      CHECK(spanned_subgroup(kernel_mod_d(sys), n) == expected);
    }
  }
}

TEST_CASE("kernel generators carry the system's column labels") {
  const auto basis = kernel_mod_d(make_system(2, {{1, 1}}, 2));
  CHECK(basis.generators[0].labels() == std::vector<VertexId>{0, 1});
}
