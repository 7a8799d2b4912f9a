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

#ifndef HQC_LINEAR_HPP
#define HQC_LINEAR_HPP

#include <vector>

#include "hqc/group.hpp"
#include "hqc/hypergraph.hpp"

namespace hqc {

/// Coefficient matrix over Z_d with labelled rows (check vertices) and
/// labelled columns (unknowns). Entries live in [0, d).
struct LinearSystem {
  std::vector<VertexId> columns;
  std::vector<VertexId> row_labels;
  std::vector<std::vector<int>> rows;
  Modulus modulus;
};

/// Generating set of the solution subgroup {g : rows * g = 0 mod d}.
/// Generators are labelled by the source system's columns.
struct KernelBasis {
  std::vector<GroupTuple> generators;
  Modulus modulus;
};

/// Smith decomposition left * a * right == diag with unimodular left/right,
/// nonnegative diagonal, and each diagonal entry dividing the next.
struct SmithDecomposition {
  std::vector<std::vector<long long>> left;
  std::vector<std::vector<long long>> diag;
  std::vector<std::vector<long long>> right;
};

SmithDecomposition smith_normal_form(std::vector<std::vector<long long>> a);

/// Null-space basis via Gauss-Jordan elimination over the field Z_p.
/// Rejects composite moduli. Generators ordered by free column, ascending.
KernelBasis kernel_elimination(const LinearSystem& sys);

/// Kernel over Z_d for any d: lift to the integers, Smith-decompose, and
/// scale the right-transform columns by d / gcd(s_i, d). Zero generators
/// are dropped.
KernelBasis kernel_smith(const LinearSystem& sys);

/// Field elimination for prime d, Smith normal form otherwise.
KernelBasis kernel_mod_d(const LinearSystem& sys);

}  // namespace hqc

#endif  // HQC_LINEAR_HPP
