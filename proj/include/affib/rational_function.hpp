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

#include <vector>

namespace affib {

/// Quotient of polynomials kept in lowest terms with a monic denominator,
/// so equal functions compare equal.
class RationalFunction {
public:
  RationalFunction() : num_(0), den_(Polynomial::constant(0, 1)) {}
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(std::size_t arity, const Rational &c);
  static RationalFunction variable(std::size_t arity, std::size_t index);

  const Polynomial &num() const { return num_; }
  const Polynomial &den() const { return den_; }
  std::size_t arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
  friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// p evaluated at rational-function arguments, in lowest terms.
RationalFunction substitute(const Polynomial &p, std::span<const RationalFunction> args);

/// Least common multiple, primitive_normalized.
Polynomial lcm(const Polynomial &a, const Polynomial &b);

/// Multiplies by the lcm of the denominators, then normalize_projective.
std::vector<Polynomial> clear_denominators(std::span<const RationalFunction> v);

} // namespace affib
