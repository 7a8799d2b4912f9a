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

#ifndef HQC_GROUP_HPP
#define HQC_GROUP_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hqc {

/// Order of the cyclic group Z_d. Always at least 2.
class Modulus {
 public:
  explicit Modulus(int d);

  int value() const { return d_; }
  bool is_prime() const;

  friend bool operator==(Modulus a, Modulus b) { return a.d_ == b.d_; }
  friend bool operator!=(Modulus a, Modulus b) { return a.d_ != b.d_; }

 private:
  int d_;
};

/// A residue in [0, d) carrying its modulus. Arithmetic across mismatched
/// moduli is rejected.
class GroupElement {
 public:
  GroupElement(long long value, Modulus modulus);

  int value() const { return value_; }
  Modulus modulus() const { return modulus_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  int value_;
  Modulus modulus_;
};

GroupElement add(GroupElement a, GroupElement b);
GroupElement neg(GroupElement a);

/// Ordered residues sharing one modulus, optionally labelled by vertex id.
/// Labels, when present, parallel the value list entry for entry.
class GroupTuple {
 public:
  GroupTuple(Modulus modulus, std::vector<int> values);
  GroupTuple(Modulus modulus, std::vector<int> values, std::vector<int> labels);

  Modulus modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }
  int value(std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  const std::vector<int>& labels() const { return labels_; }
  bool is_zero() const;

  friend bool operator==(const GroupTuple& a, const GroupTuple& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_ &&
           a.labels_ == b.labels_;
  }

 private:
  Modulus modulus_;
  std::vector<int> values_;
  std::vector<int> labels_;
};

/// exp(2*pi*i * exponent / d).
std::complex<double> root_of_unity(Modulus d, long long exponent);

/// The k-argument character w^(g1*g2*...*gk) with w = exp(2*pi*i/d).
/// Multiplicative in every argument. Rejects an empty argument list and
/// mixed moduli.
std::complex<double> bicharacter(std::span<const GroupElement> args);
std::complex<double> bicharacter(Modulus d, std::span<const int> values);

/// Sums the character over its first argument with the remaining k-1
/// arguments fixed, and compares the sum against |G| * delta(product of
/// fixed entries mod d). True when the sum matches within 1e-9.
bool check_nondegeneracy(Modulus d, int k, const GroupTuple& fixed);

}  // namespace hqc

#endif  // HQC_GROUP_HPP
