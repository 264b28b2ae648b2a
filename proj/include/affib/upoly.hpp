// Copyright 2026 The affib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "affib/polynomial.hpp"

#include <utility>
#include <vector>

namespace affib {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. Used for restrictions to lines and curves.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational &c);
  /// Converts an arity-1 Polynomial.
  static UPoly from_polynomial(const Polynomial &p);

  const std::vector<Rational> &coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational &leading() const { return c_.back(); }
  Rational coefficient(std::size_t d) const;

  /// Index of the lowest nonzero coefficient. Precondition: nonzero.
  std::size_t order() const;

  Rational operator()(const Rational &t) const;

  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend bool operator==(const UPoly &, const UPoly &) = default;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Division with remainder. Throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);

UPoly derivative(const UPoly &p);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly &a, const UPoly &b);

/// p / gcd(p, p'), monic.
UPoly square_free_part(const UPoly &p);

/// Distinct rational roots in increasing order. p nonzero.
std::vector<Rational> rational_roots(const UPoly &p);

/// Number of distinct complex roots (degree of the square-free part).
int distinct_root_count(const UPoly &p);

} // namespace affib
