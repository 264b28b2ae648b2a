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

#include "affib/poly_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affib {

using IndexTuple = std::vector<std::size_t>;

/// "0,2,3"
std::string tuple_key(const IndexTuple &t);

/// Plücker coordinates of a d-dimensional subspace of an n-dimensional space
/// with polynomial entries. Coordinates run over all d-subsets of columns in
/// lexicographic order.
struct PlueckerVector {
  std::size_t ambient = 0;
  std::size_t subspace_dim = 0;
  std::vector<IndexTuple> tuples;
  std::vector<Polynomial> coordinates;
  bool reduced = false;

  const Polynomial &at(const IndexTuple &t) const;
  /// Nonzero coordinates in tuple order.
  std::vector<Polynomial> nonzero_coordinates() const;

  friend bool operator==(const PlueckerVector &, const PlueckerVector &) = default;
};

/// Maximal minors of the basis matrix (basis vectors as rows), unreduced.
PlueckerVector pluecker_raw(const KernelBasis &basis);

/// Divides by the gcd of all coordinates and applies normalize_projective.
PlueckerVector reduce(PlueckerVector v);

/// pluecker_raw followed by reduce.
PlueckerVector pluecker(const KernelBasis &basis);

/// A point of the Grassmannian with exact rational Plücker coordinates,
/// scaled so the first nonzero coordinate is 1.
struct GrassmannPoint {
  std::size_t ambient = 0;
  std::size_t subspace_dim = 0;
  std::vector<IndexTuple> tuples;
  std::vector<Rational> coordinates;

  friend bool operator==(const GrassmannPoint &, const GrassmannPoint &) = default;
};

/// Normalizes coordinates listed in combinations(n, d) order. Throws
/// std::invalid_argument when they are all zero.
GrassmannPoint make_grassmann_point(std::size_t n, std::size_t d,
                                    std::vector<Rational> coords);

/// Span of the given independent rational vectors.
GrassmannPoint span_point(const std::vector<std::vector<Rational>> &vectors);

/// Evaluates polynomial Plücker coordinates; nullopt if all vanish.
std::optional<GrassmannPoint> evaluate(const PlueckerVector &v,
                                       std::span<const Rational> point);

/// A basis (rows) of the subspace, in the chart where the columns of the
/// first nonzero coordinate form an identity block.
std::vector<std::vector<Rational>> basis_of(const GrassmannPoint &g);

/// Checks every quadratic Grassmann-Plücker relation exactly.
bool satisfies_pluecker_relations(std::size_t n, std::size_t d,
                                  std::span<const Rational> coords);

Rational rational_determinant(std::vector<std::vector<Rational>> a);

} // namespace affib
