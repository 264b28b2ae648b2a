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

#include "affib/conjecture.hpp"

#include "affib/sampling.hpp"
#include "affib/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace affib {

bool contains_affine_set(const std::vector<Polynomial> &generators, const Piece &piece) {
  for (const auto &g : generators) {
    if (g.arity() != piece.ambient())
      throw ArityMismatch("generator arity does not match the piece's ambient space");
    if (!compose(g, piece.parametrization()).is_zero())
      return false;
  }
  return true;
}

bool contains_affine_set(const std::vector<Polynomial> &generators, const AffineSubspace &s) {
  return contains_affine_set(generators, Piece::from_affine(s));
}

std::string to_string(VerdictKind k) {
  switch (k) {
  case VerdictKind::Consistent:
    return "Consistent";
  case VerdictKind::PieceNotContained:
    return "PieceNotContained";
  case VerdictKind::UncoveredZeroFound:
    return "UncoveredZeroFound";
  }
  return "?";
}

std::string UnionVerdict::details() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == VerdictKind::PieceNotContained)
    os << " piece=" << piece_index;
  if (kind == VerdictKind::UncoveredZeroFound) {
    os << " point=(";
    for (std::size_t i = 0; i < point.size(); ++i)
      os << (i ? "," : "") << point[i].get_str();
    os << ")";
  }
  os << "; lines=" << lines << " inside_zero_set=" << lines_inside_zero_set
     << " rational_points=" << points_checked << " unchecked_points=" << unchecked_points
     << " piece_dims=[";
  for (std::size_t i = 0; i < piece_dimensions.size(); ++i)
    os << (i ? "," : "") << piece_dimensions[i];
  os << "]";
  return os.str();
}

namespace {

std::uint64_t slice_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Line {
  std::vector<Rational> base, dir;
};

Line random_line(Sampler &rng, const std::vector<Piece> &pieces, std::size_t n,
                 std::size_t family) {
  constexpr long kRange = 50;
  Line l{rng.point(n, -kRange, kRange), rng.point(n, -kRange, kRange)};
  if (family == 0)
    return l;
  if (family == 2 && !pieces.empty()) {
    const Piece &p = pieces[rng.next() % pieces.size()];
    l.base = p.point_at(rng.point(p.dimension(), -kRange, kRange));
  }
  // Pin a random proper subset of coordinates so the line stays inside a
  // coordinate subspace (through the base point for family 2).
  std::vector<bool> pinned(n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pinned[i] = rng.next() % 2 == 0;
    count += pinned[i];
  }
  if (count == n)
    pinned[rng.next() % n] = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pinned[i])
      continue;
    l.dir[i] = 0;
    if (family == 1)
      l.base[i] = 0;
  }
  bool moving = false;
  for (const auto &d : l.dir)
    moving = moving || d != 0;
  if (!moving)
    for (std::size_t i = 0; i < n; ++i)
      if (!pinned[i]) {
        l.dir[i] = 1;
        break;
      }
  return l;
}

std::vector<Rational> point_on(const Line &l, const Rational &t) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < l.base.size(); ++i)
    p.push_back(l.base[i] + t * l.dir[i]);
  return p;
}

bool covered(const std::vector<Piece> &pieces, const std::vector<Rational> &p) {
  for (const auto &piece : pieces)
    if (piece.contains(p))
      return true;
  return false;
}

} // namespace

UnionVerdict verify_union_of_affine(const std::vector<Polynomial> &generators,
                                    const std::vector<Piece> &pieces, std::size_t samples,
                                    std::uint64_t seed) {
  if (pieces.empty())
    throw std::invalid_argument("verify_union_of_affine: no pieces");
  const std::size_t n = pieces.front().ambient();
  UnionVerdict v;
  for (const auto &p : pieces) {
    if (p.ambient() != n)
      throw ArityMismatch("pieces live in different ambient spaces");
    v.piece_dimensions.push_back(p.dimension());
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!contains_affine_set(generators, pieces[i])) {
      v.kind = VerdictKind::PieceNotContained;
      v.piece_index = i;
      return v;
    }
  }

  for (std::size_t s = 0; s < samples; ++s) {
    Sampler rng(slice_seed(seed, s));
    const Line line = random_line(rng, pieces, n, s % 3);
    ++v.lines;

    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial c = Polynomial::constant(1, line.base[i]);
      c.add_term(Monomial(std::vector<unsigned>{1}), line.dir[i]);
      coords.push_back(std::move(c));
    }
    UPoly common;
    for (const auto &g : generators) {
      common = gcd(common, UPoly::from_polynomial(compose(g, coords)));
      if (common.degree() == 0)
        break;
    }

    std::vector<Rational> params;
    if (common.is_zero()) {
      ++v.lines_inside_zero_set;
      params = {Rational(0), Rational(1), Rational(-1), Rational(2),
                Rational(rng.integer(-1000, 1000)) / 7};
    } else if (common.degree() >= 1) {
      params = rational_roots(common);
      v.unchecked_points += static_cast<std::size_t>(distinct_root_count(common)) - params.size();
    }
    for (const auto &t : params) {
      auto p = point_on(line, t);
      ++v.points_checked;
      if (!covered(pieces, p)) {
        v.kind = VerdictKind::UncoveredZeroFound;
        v.point = std::move(p);
        return v;
      }
    }
  }
  return v;
}

} // namespace affib
