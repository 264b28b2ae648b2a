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

#include <optional>
#include <vector>

namespace affib {

/// basepoint + span(directions), directions linearly independent.
class AffineSubspace {
public:
  AffineSubspace(std::vector<Rational> basepoint,
                 std::vector<std::vector<Rational>> directions);

  /// The single point p.
  static AffineSubspace point(std::vector<Rational> p);
  /// The whole space of dimension n.
  static AffineSubspace whole(std::size_t n);
  /// Points of the n-space whose listed coordinates vanish.
  static AffineSubspace coordinate_zero(std::size_t n, const std::vector<std::size_t> &zero);

  std::size_t ambient() const { return basepoint_.size(); }
  std::size_t dimension() const { return directions_.size(); }
  const std::vector<Rational> &basepoint() const { return basepoint_; }
  const std::vector<std::vector<Rational>> &directions() const { return directions_; }

  /// Coordinates as polynomials in dimension() parameters.
  std::vector<Polynomial> parametrization() const;
  /// Affine-linear equations (arity ambient()) cutting out the subspace.
  std::vector<Polynomial> equations() const;
  bool contains(std::span<const Rational> p) const;
  /// Same set, regardless of basepoint and basis choice.
  bool same_set(const AffineSubspace &other) const;

private:
  std::vector<Rational> basepoint_;
  std::vector<std::vector<Rational>> directions_;
};

std::size_t affine_dimension(const AffineSubspace &s);

/// Solution set of affine-linear equations in n unknowns; nullopt when
/// inconsistent. Throws InputError on a nonlinear equation.
std::optional<AffineSubspace> solve_linear(const std::vector<Polynomial> &equations,
                                           std::size_t n);

std::optional<AffineSubspace> intersect(const AffineSubspace &a, const AffineSubspace &b);

/// A piece of a candidate singular set: the zero set of `equations`, which
/// is the graph of a polynomial map over its free coordinates. Linear
/// pieces and bilinear families such as {y = 0, z = v*t} both fit.
class Piece {
public:
  /// Eliminates, one equation at a time, a variable that occurs linearly
  /// with a constant coefficient. Returns nullopt when the equations are
  /// inconsistent; throws InputError when no such variable exists.
  static std::optional<Piece> try_from_equations(std::vector<Polynomial> equations,
                                                 std::size_t n);
  /// Like try_from_equations but throws InputError on an empty set.
  static Piece from_equations(std::vector<Polynomial> equations, std::size_t n);
  static Piece from_affine(const AffineSubspace &s);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<Polynomial> &equations() const { return equations_; }
  /// Ambient coordinates as polynomials in dimension() parameters.
  const std::vector<Polynomial> &parametrization() const { return param_; }

  bool contains(std::span<const Rational> p) const;
  /// Parameters of a point on the piece, nullopt if it is not on it.
  std::optional<std::vector<Rational>> parameters_of(std::span<const Rational> p) const;
  std::vector<Rational> point_at(std::span<const Rational> params) const;
  /// The tangent space at point_at(params) as an affine subspace.
  AffineSubspace tangent_at(std::span<const Rational> params) const;
  /// Set when the parametrization has degree <= 1.
  std::optional<AffineSubspace> as_affine() const;

private:
  std::size_t ambient_ = 0;
  std::vector<Polynomial> equations_;
  std::vector<Polynomial> param_;
  std::vector<std::size_t> free_;
  std::size_t dim_ = 0;
};

/// Intersection of two pieces. Nullopt when empty; throws Error when the
/// intersection is nonempty but not an affine subspace.
std::optional<AffineSubspace> intersect(const Piece &a, const Piece &b);

} // namespace affib
