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

#include "affib/affine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace affib {

/// True iff every generator vanishes identically on the piece.
bool contains_affine_set(const std::vector<Polynomial> &generators, const Piece &piece);
bool contains_affine_set(const std::vector<Polynomial> &generators, const AffineSubspace &s);

enum class VerdictKind { Consistent, PieceNotContained, UncoveredZeroFound };

struct UnionVerdict {
  VerdictKind kind = VerdictKind::Consistent;
  /// Index of the first piece not contained in the zero set.
  std::size_t piece_index = 0;
  /// A common zero of the generators outside every piece.
  std::vector<Rational> point;

  std::size_t lines = 0;
  std::size_t lines_inside_zero_set = 0;
  std::size_t points_checked = 0;
  /// Intersections of lines with the zero set at irrational or non-real
  /// parameters; these are counted but not checked.
  std::size_t unchecked_points = 0;
  std::vector<std::size_t> piece_dimensions;

  std::string details() const;
};

/// Checks that the common zero set of the generators is the union of the
/// pieces. Containment of each piece is exact. Completeness is sampled:
/// `samples` seeded random lines (generic, partly pinned to coordinate
/// subspaces, and through piece points) are intersected with the zero set
/// and every rational intersection point must lie on some piece.
UnionVerdict verify_union_of_affine(const std::vector<Polynomial> &generators,
                                    const std::vector<Piece> &pieces, std::size_t samples,
                                    std::uint64_t seed);

std::string to_string(VerdictKind k);

} // namespace affib
