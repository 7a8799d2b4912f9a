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

#include "hqc/group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hqc {

namespace {

int reduce(long long value, int d) {
  long long r = value % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

}  // namespace

Modulus::Modulus(int d) : d_(d) {
  if (d < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " +
                                std::to_string(d));
  }
}

bool Modulus::is_prime() const {
  for (int f = 2; f * f <= d_; ++f) {
    if (d_ % f == 0) return false;
  }
  return true;
}

GroupElement::GroupElement(long long value, Modulus modulus)
    : value_(reduce(value, modulus.value())), modulus_(modulus) {}

GroupElement add(GroupElement a, GroupElement b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("cannot add elements of Z_" +
                                std::to_string(a.modulus().value()) +
                                " and Z_" +
                                std::to_string(b.modulus().value()));
  }
  return GroupElement(static_cast<long long>(a.value()) + b.value(),
                      a.modulus());
}

GroupElement neg(GroupElement a) {
  return GroupElement(-static_cast<long long>(a.value()), a.modulus());
}

GroupTuple::GroupTuple(Modulus modulus, std::vector<int> values)
    : GroupTuple(modulus, std::move(values), {}) {}

GroupTuple::GroupTuple(Modulus modulus, std::vector<int> values,
                       std::vector<int> labels)
    : modulus_(modulus), values_(std::move(values)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != values_.size()) {
    throw std::invalid_argument("label list must match value list in length");
  }
  for (int& v : values_) v = reduce(v, modulus_.value());
}

bool GroupTuple::is_zero() const {
  for (int v : values_) {
    if (v != 0) return false;
  }
  return true;
}

std::complex<double> root_of_unity(Modulus d, long long exponent) {
  const int e = reduce(exponent, d.value());
  const double angle = 2.0 * std::numbers::pi * e / d.value();
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> bicharacter(Modulus d, std::span<const int> values) {
  if (values.empty()) {
    throw std::invalid_argument("bicharacter needs at least one argument");
  }
  long long product = 1;
  for (int v : values) {
    product = product * reduce(v, d.value()) % d.value();
  }
  return root_of_unity(d, product);
}

std::complex<double> bicharacter(std::span<const GroupElement> args) {
  if (args.empty()) {
    throw std::invalid_argument("bicharacter needs at least one argument");
  }
  const Modulus d = args.front().modulus();
  std::vector<int> values;
  values.reserve(args.size());
  for (const GroupElement& g : args) {
    if (g.modulus() != d) {
      throw std::invalid_argument("bicharacter arguments must share a modulus");
    }
    values.push_back(g.value());
  }
  return bicharacter(d, values);
}

bool check_nondegeneracy(Modulus d, int k, const GroupTuple& fixed) {
  if (k < 2) {
    throw std::invalid_argument("nondegeneracy check needs k >= 2");
  }
  if (fixed.modulus() != d) {
    throw std::invalid_argument("fixed tuple modulus does not match d");
  }
  if (fixed.size() != static_cast<std::size_t>(k - 1)) {
    throw std::invalid_argument("fixed tuple must have k-1 entries");
  }

  std::complex<double> sum = 0.0;
  std::vector<int> args(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < fixed.size(); ++i) args[i + 1] = fixed.value(i);
  for (int g = 0; g < d.value(); ++g) {
    args[0] = g;
    sum += bicharacter(d, args);
  }

  long long product = 1;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    product = product * fixed.value(i) % d.value();
  }
  const double expected = (product % d.value() == 0) ? d.value() : 0.0;
  return std::abs(sum - expected) <= 1e-9;
}

}  // namespace hqc
