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

#include "affib/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace affib {

/// Exponent vector of a monomial; its length is the ambient arity.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned &operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned> &exponents() const { return exps_; }

  unsigned total_degree() const;
  bool is_one() const { return total_degree() == 0; }
  bool divides(const Monomial &other) const;

  Monomial operator*(const Monomial &other) const;
  /// Precondition: d.divides(*this).
  Monomial operator/(const Monomial &d) const;

  friend bool operator==(const Monomial &, const Monomial &) = default;

private:
  std::vector<unsigned> exps_;
};

/// Graded reverse lexicographic order.
int grevlex_compare(const Monomial &a, const Monomial &b);

/// Strict "greater than" in grevlex; used so the leading term comes first.
struct GrevlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return grevlex_compare(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are kept in descending grevlex order with no zero
/// coefficients, so equality is structural.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Rational &c);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial term(Monomial m, const Rational &c);

  std::size_t arity() const { return arity_; }
  const TermMap &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Leading term in grevlex. Precondition: nonzero.
  const Monomial &leading_monomial() const;
  const Rational &leading_coefficient() const;
  Rational coefficient(const Monomial &m) const;
  Rational constant_term() const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial &m, const Rational &c);

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Rational &c);

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial &b);
Polynomial operator-(Polynomial a, const Polynomial &b);
Polynomial operator*(const Polynomial &a, const Polynomial &b);
Polynomial operator*(Polynomial a, const Rational &c);
Polynomial operator*(const Rational &c, Polynomial a);

Polynomial add(const Polynomial &a, const Polynomial &b);
Polynomial mul(const Polynomial &a, const Polynomial &b);
Polynomial pow(const Polynomial &p, unsigned exponent);

/// Formal derivative with respect to variable `var`.
Polynomial partial_derivative(const Polynomial &p, std::size_t var);

Rational evaluate(const Polynomial &p, std::span<const Rational> point);

/// Polynomial composition p(args[0], ..., args[n-1]). All args share an
/// arity, which becomes the arity of the result.
Polynomial compose(const Polynomial &p, std::span<const Polynomial> args);

/// Re-embeds p into a ring with `arity` >= p.arity() variables; the new
/// variables are appended after the existing ones.
Polynomial extend_arity(const Polynomial &p, std::size_t arity);

/// Quotient a/b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial &a, const Polynomial &b);

/// Like divide_exact but throws if the division leaves a remainder.
Polynomial divide_or_throw(const Polynomial &a, const Polynomial &b);

bool divides(const Polynomial &d, const Polynomial &p);

/// Scales p to integer coefficients with gcd 1 and a positive leading
/// coefficient. Zero stays zero.
Polynomial primitive_normalized(const Polynomial &p);

/// The rational c such that c * primitive_normalized(p) == p. p nonzero.
Rational rational_content(const Polynomial &p);

/// Greatest common divisor, returned primitive_normalized. gcd(a, 0) is
/// the normalized a. Throws std::invalid_argument if both are zero.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

/// Coefficients of p viewed as a polynomial in `var`; entry d is the
/// coefficient of var^d and does not involve var.
std::vector<Polynomial> coefficients_in(const Polynomial &p, std::size_t var);

/// Normalizes a vector of polynomials as a projective point: divides by the
/// gcd of all entries, clears rational content so all coefficients are
/// coprime integers, and makes the leading coefficient of the first nonzero
/// entry positive. A zero vector is returned unchanged.
std::vector<Polynomial> normalize_projective(std::vector<Polynomial> v);

} // namespace affib
