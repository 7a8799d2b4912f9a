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

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hqc {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void add_row(Matrix& m, std::size_t dst, std::size_t src, long long factor) {
  for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += factor * m[src][c];
}

void add_col(Matrix& m, std::size_t dst, std::size_t src, long long factor) {
  for (std::size_t r = 0; r < m.size(); ++r) m[r][dst] += factor * m[r][src];
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// Smallest nonzero |entry| in the submatrix starting at (t, t); false when
// that submatrix is all zero.
bool find_pivot(const Matrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  long long best = 0;
  bool found = false;
  for (std::size_t i = t; i < d.size(); ++i) {
    for (std::size_t j = t; j < d[i].size(); ++j) {
      const long long a = std::llabs(d[i][j]);
      if (a != 0 && (!found || a < best)) {
        best = a;
        pr = i;
        pc = j;
        found = true;
      }
    }
  }
  return found;
}

bool cross_cleared(const Matrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.size(); ++i) {
    if (d[i][t] != 0) return false;
  }
  for (std::size_t j = t + 1; j < d[t].size(); ++j) {
    if (d[t][j] != 0) return false;
  }
  return true;
}

int mod_pow_inverse(int a, int p) {
  // Fermat inverse; p is prime and a is nonzero mod p.
  long long result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace

SmithDecomposition smith_normal_form(Matrix a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();

  SmithDecomposition snf{identity(m), std::move(a), identity(n)};
  Matrix& d = snf.diag;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pr = t, pc = t;
      if (!find_pivot(d, t, pr, pc)) break;
      std::swap(d[t], d[pr]);
      std::swap(snf.left[t], snf.left[pr]);
      swap_cols(d, t, pc);
      swap_cols(snf.right, t, pc);

      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] != 0) {
          const long long q = d[i][t] / d[t][t];
          add_row(d, i, t, -q);
          add_row(snf.left, i, t, -q);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] != 0) {
          const long long q = d[t][j] / d[t][t];
          add_col(d, j, t, -q);
          add_col(snf.right, j, t, -q);
        }
      }
      if (!cross_cleared(d, t)) continue;

      // Divisibility fix-up: fold in a row whose entries the pivot misses.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i) {
        for (std::size_t j = t + 1; j < n && divides_all; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, 1);
            add_row(snf.left, t, i, 1);
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (d[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) d[t][j] = -d[t][j];
      for (std::size_t j = 0; j < m; ++j) snf.left[t][j] = -snf.left[t][j];
    }
  }
  return snf;
}

KernelBasis kernel_elimination(const LinearSystem& sys) {
  if (!sys.modulus.is_prime()) {
    throw std::invalid_argument("field elimination needs a prime modulus");
  }
  const int p = sys.modulus.value();
  const std::size_t n = sys.columns.size();

  std::vector<std::vector<int>> m = sys.rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[pivot_row]);

    const long long inv = mod_pow_inverse(m[pivot_row][col], p);
    for (std::size_t c = 0; c < n; ++c) {
      m[pivot_row][c] = static_cast<int>(m[pivot_row][c] * inv % p);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const long long factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = static_cast<int>(((m[r][c] - factor * m[pivot_row][c]) % p + p) % p);
      }
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  KernelBasis basis{{}, sys.modulus};
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v[pivot_cols[r]] = (p - m[r][free]) % p;
    }
    basis.generators.emplace_back(sys.modulus, std::move(v), sys.columns);
  }
  return basis;
}

KernelBasis kernel_smith(const LinearSystem& sys) {
  const long long d = sys.modulus.value();
  const std::size_t m = sys.rows.size();
  const std::size_t n = sys.columns.size();

  SmithDecomposition snf;
  if (m == 0) {
    // No constraints: the right transform is the identity and every
    // diagonal entry is absent.
    snf.right = identity(n);
  } else {
    Matrix a(m, std::vector<long long>(n, 0));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = sys.rows[r][c];
    }
    snf = smith_normal_form(std::move(a));
  }

  KernelBasis basis{{}, sys.modulus};
  for (std::size_t i = 0; i < n; ++i) {
    const long long s = i < std::min(m, n) ? snf.diag[i][i] : 0;
    const long long multiplier = d / std::gcd(s % d, d);
    std::vector<int> v(n, 0);
    bool zero = true;
    for (std::size_t r = 0; r < n; ++r) {
      v[r] = static_cast<int>(((snf.right[r][i] * multiplier) % d + d) % d);
      if (v[r] != 0) zero = false;
    }
    if (!zero) basis.generators.emplace_back(sys.modulus, std::move(v), sys.columns);
  }
  return basis;
}

KernelBasis kernel_mod_d(const LinearSystem& sys) {
  return sys.modulus.is_prime() ? kernel_elimination(sys) : kernel_smith(sys);
}

}  // namespace hqc
