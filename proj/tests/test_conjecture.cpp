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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "affib/catalog.hpp"
#include "affib/conjecture.hpp"
#include "affib/parse.hpp"
#include "support/generators.hpp"

using namespace affib;
using namespace affib::testing;

namespace {

const VariableNames k4 = parse_variable_names("x1,x2,x3,x4");
const VariableNames k7 = parse_variable_names("x,y,z,v,w,s,t");

Polynomial P(std::string_view s, const VariableNames &v = k4) { return parse_polynomial(s, v); }

Piece piece(std::string_view eqs, const VariableNames &v = k4) {
  return Piece::from_equations(parse_piece_equations(eqs, v).at(0), v.size());
}

std::vector<Polynomial> ex1_generators() {
  return analyze(HoloMap::from_potential(P("x1*x2^2 + (x3 - x2*x4)^2"))).singular_generators;
}

} // namespace

TEST_CASE("affine subspaces") {
  const AffineSubspace line({1, 2, 0}, {{1, 1, 0}});
  CHECK(line.dimension() == 1);
  CHECK(affine_dimension(line) == 1);
  CHECK(line.contains(std::vector<Rational>{3, 4, 0}));
  CHECK_FALSE(line.contains(std::vector<Rational>{3, 4, 1}));
  CHECK(line.same_set(AffineSubspace({0, 1, 0}, {{-2, -2, 0}})));
  CHECK_THROWS(AffineSubspace({0, 0}, {{1, 1}, {2, 2}}));
  const auto eqs = line.equations();
  CHECK(eqs.size() == 2);
  for (const auto &e : eqs)
    CHECK(evaluate(e, std::vector<Rational>{5, 6, 0}) == 0);
  CHECK(AffineSubspace::whole(3).dimension() == 3);
  CHECK(AffineSubspace::point({1, 2}).dimension() == 0);
}

TEST_CASE("linear systems and intersections") {
  const auto s = solve_linear({P("x1 + x2 - 1"), P("x3")}, 4);
  REQUIRE(s);
  CHECK(s->dimension() == 2);
  CHECK_FALSE(solve_linear({P("x1"), P("x1 - 1")}, 4).has_value());
  CHECK_THROWS_AS(solve_linear({P("x1*x2")}, 4), InputError);
  const auto a = AffineSubspace::coordinate_zero(4, {0, 1});
  const auto b = AffineSubspace::coordinate_zero(4, {1, 2});
  const auto m = intersect(a, b);
  REQUIRE(m);
  CHECK(m->same_set(AffineSubspace::coordinate_zero(4, {0, 1, 2})));
  CHECK_FALSE(intersect(AffineSubspace::point({0, 0}), AffineSubspace::point({1, 0})).has_value());
}

TEST_CASE("pieces given by equations") {
  const Piece p = piece("y=0,z=v*t", k7);
  CHECK(p.dimension() == 5);
  CHECK_FALSE(p.as_affine().has_value());
  const std::vector<Rational> params{1, 2, 3, 4, 5};
  const auto x = p.point_at(params);
  CHECK(p.contains(x));
  CHECK(p.parameters_of(x) == params);
  auto off = x;
  off[1] += 1;
  CHECK_FALSE(p.contains(off));
  CHECK_FALSE(p.parameters_of(off).has_value());
  const auto tangent = p.tangent_at(params);
  CHECK(tangent.dimension() == 5);
  CHECK(tangent.contains(x));

  const Piece lin = piece("x2=0,x3=0");
  REQUIRE(lin.as_affine());
  CHECK(lin.as_affine()->same_set(AffineSubspace::coordinate_zero(4, {1, 2})));
  CHECK(Piece::from_affine(AffineSubspace::coordinate_zero(4, {0})).dimension() == 3);

  CHECK_FALSE(Piece::try_from_equations({P("x1"), P("x1 - 1")}, 4).has_value());
  CHECK_THROWS_AS(Piece::from_equations({P("x1"), P("x1 - 1")}, 4), InputError);
  CHECK_THROWS_AS(Piece::from_equations({P("x1^2 + x2^2")}, 4), InputError);
}

TEST_CASE("intersection of the two seven-variable families") {
  const auto m = intersect(piece("y=0,z=v*t", k7), piece("v=0,z=y*w", k7));
  REQUIRE(m);
  CHECK(m->dimension() == 4);
  CHECK(m->same_set(AffineSubspace::coordinate_zero(7, {1, 2, 3})));
  CHECK_THROWS_AS(intersect(piece("y=0,z=v*t", k7), piece("z=0", k7)), Error);
}

TEST_CASE("containment of pieces in the zero set") {
  const auto gens = ex1_generators();
  CHECK(contains_affine_set(gens, piece("x2=0,x3=0")));
  CHECK(contains_affine_set(gens, AffineSubspace::coordinate_zero(4, {0, 1, 2})));
  CHECK_FALSE(contains_affine_set(gens, piece("x2=0")));
  CHECK_FALSE(contains_affine_set(gens, AffineSubspace::coordinate_zero(4, {0})));
}

TEST_CASE("union verdicts for the first example") {
  const auto gens = ex1_generators();
  const auto ok = verify_union_of_affine(gens, {piece("x2=0,x3=0")}, 200, 0);
  CHECK(ok.kind == VerdictKind::Consistent);
  CHECK(ok.lines == 200);
  CHECK(ok.piece_dimensions == std::vector<std::size_t>{2});

  const auto small = verify_union_of_affine(gens, {piece("x1=0,x2=0,x3=0")}, 200, 0);
  REQUIRE(small.kind == VerdictKind::UncoveredZeroFound);
  for (const auto &g : gens)
    CHECK(evaluate(g, small.point) == 0);
  CHECK_FALSE(piece("x1=0,x2=0,x3=0").contains(small.point));

  const auto big = verify_union_of_affine(gens, {piece("x2=0,x3=0"), piece("x1=0")}, 50, 0);
  CHECK(big.kind == VerdictKind::PieceNotContained);
  CHECK(big.piece_index == 1);
  CHECK(to_string(VerdictKind::Consistent) == "Consistent");
}

TEST_CASE("union verification is deterministic in the seed") {
  const auto gens = ex1_generators();
  const auto a = verify_union_of_affine(gens, {piece("x2=0,x3=0")}, 100, 7);
  const auto b = verify_union_of_affine(gens, {piece("x2=0,x3=0")}, 100, 7);
  CHECK(a.details() == b.details());
}

TEST_CASE("consistent verdicts survive more samples and another seed") {
  for (const auto &e : catalog()) {
    if (e.expected_singular_pieces.empty())
      continue;
    const auto gens = analyze(e.map()).singular_generators;
    const auto pieces = e.pieces();
    const auto first = verify_union_of_affine(gens, pieces, 200, 0);
    REQUIRE(first.kind == VerdictKind::Consistent);
    const auto again = verify_union_of_affine(gens, pieces, 2000, 12345);
    CHECK_MESSAGE(again.kind == VerdictKind::Consistent, e.id);
  }
}

TEST_CASE("unions of coordinate subspaces are recognized") {
  // The ideal of V(S1) u V(S2) is generated by x_i * x_j, i in S1, j in S2.
  Gen g(31);
  int incomplete = 0;
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(3, 5));
    std::vector<std::size_t> s1, s2;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.coin())
        s1.push_back(v);
      if (g.coin())
        s2.push_back(v);
    }
    if (s1.empty() || s2.empty())
      continue;
    std::vector<Polynomial> gens;
    for (auto a : s1)
      for (auto b : s2)
        gens.push_back(Polynomial::variable(n, a) * Polynomial::variable(n, b));
    const auto p1 = Piece::from_affine(AffineSubspace::coordinate_zero(n, s1));
    const auto p2 = Piece::from_affine(AffineSubspace::coordinate_zero(n, s2));
    REQUIRE(verify_union_of_affine(gens, {p1, p2}, 100, static_cast<std::uint64_t>(i)).kind ==
            VerdictKind::Consistent);
    const bool nested = std::includes(s2.begin(), s2.end(), s1.begin(), s1.end());
    if (nested)
      continue;
    // S1 is not inside S2, so V(S2) is not inside V(S1); V(S1) alone misses part of the set.
    const auto v = verify_union_of_affine(gens, {p1}, 200, static_cast<std::uint64_t>(i));
    REQUIRE(v.kind == VerdictKind::UncoveredZeroFound);
    REQUIRE_FALSE(p1.contains(v.point));
    REQUIRE(p2.contains(v.point));
    ++incomplete;
  }
  CHECK(incomplete > 5);
}
