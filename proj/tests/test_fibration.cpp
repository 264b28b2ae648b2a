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

#include "affib/catalog.hpp"
#include "affib/fibration.hpp"
#include "affib/parse.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace affib;
using namespace affib::testing;

namespace {

const VariableNames kX = parse_variable_names("x1,x2,x3,x4");

Polynomial P(std::string_view s, const VariableNames &v = kX) { return parse_polynomial(s, v); }

HoloMap ex1() { return HoloMap::from_potential(P("x1*x2^2 + (x3 - x2*x4)^2")); }

// d/dt f(p + t e_j) at t = 0 from deg + 1 samples by Lagrange interpolation.
Rational derivative_by_samples(const Polynomial &f, std::vector<Rational> p, std::size_t j) {
  const int deg = std::max(f.total_degree(), 1);
  std::vector<Rational> ts, ys;
  for (int i = 0; i <= deg; ++i) {
    auto q = p;
    q[j] += i;
    ts.emplace_back(i);
    ys.push_back(evaluate(f, q));
  }
  // Coefficient of t in the interpolant: sum_i y_i * [t^1] L_i(t).
  Rational out = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Rational denom = 1, e1 = 0, prod = 1;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (k == i)
        continue;
      denom *= ts[i] - ts[k];
      prod *= -ts[k];
    }
    // [t^1] prod_k (t - t_k) = sum_k prod_{l != k} (-t_l).
    for (std::size_t k = 0; k < ts.size(); ++k) {
      if (k == i)
        continue;
      Rational term = 1;
      for (std::size_t l = 0; l < ts.size(); ++l)
        if (l != i && l != k)
          term *= -ts[l];
      e1 += term;
    }
    out += ys[i] * e1 / denom;
  }
  return out;
}

} // namespace

TEST_CASE("holomorphic map construction") {
  CHECK_THROWS_AS(HoloMap::from_potential(P("x", parse_variable_names("x"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(HoloMap::from_components({P("x1"), P("x2")}), ArityMismatch);
  const auto m = ex1();
  CHECK(m.n() == 4);
  CHECK(m.gradient_source().has_value());
  CHECK(m.components()[0] == P("x2^2"));
}

TEST_CASE("Jacobian entries match sampled directional derivatives") {
  Gen g(21);
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> comps;
    for (int c = 0; c < 3; ++c)
      comps.push_back(g.polynomial(3, 4, 3));
    const auto map = HoloMap::from_components(comps);
    const auto j = map.jacobian();
    const auto p = g.point(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        REQUIRE(evaluate(j(r, c), p) == derivative_by_samples(comps[r], p, c));
  }
}

TEST_CASE("gradient maps have symmetric Jacobians") {
  Gen g(22);
  for (int i = 0; i < 200; ++i) {
    const auto psi = g.polynomial(3, 6, 3);
    REQUIRE(is_symmetric(HoloMap::from_potential(psi).jacobian()));
  }
  CHECK_FALSE(is_symmetric(HoloMap::from_components({P("x2", parse_variable_names("x1,x2")),
                                                     P("0", parse_variable_names("x1,x2"))})
                               .jacobian()));
}

TEST_CASE("condition A1") {
  CHECK(check_a1(ex1()).k == 3);
  CHECK(check_a1(ex1()).ok);
  const auto xy = parse_variable_names("x,y");
  const auto full = check_a1(HoloMap::from_potential(P("x^2 + y^2", xy)));
  CHECK(full.k == 2);
  CHECK_FALSE(full.ok);
  CHECK_FALSE(check_a1(HoloMap::from_potential(P("1", xy))).ok);
}

TEST_CASE("condition A2") {
  CHECK(check_a2(ex1()).ok);
  CHECK_FALSE(check_a2(ex1()).witness.has_value());
  const auto xy = parse_variable_names("x,y");
  const auto curved = HoloMap::from_components({P("y - x^2", xy), P("0", xy)});
  const auto r = check_a2(curved);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == P("-t^2", parse_variable_names("x,y,t")));
  CHECK_THROWS_AS(check_a2(HoloMap::from_potential(P("x^2 + y^2", xy))), Error);
}

TEST_CASE("A2 holds for rank-deficient linear maps") {
  Gen g(23);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
    // Gamma(x) = A B x with A n x (n-1), B (n-1) x n.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n - 1)),
        b(n - 1, std::vector<Rational>(n));
    for (auto &row : a)
      for (auto &x : row)
        x = g.rational(4);
    for (auto &row : b)
      for (auto &x : row)
        x = g.rational(4);
    std::vector<Polynomial> comps(n, Polynomial(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t l = 0; l < n - 1; ++l)
        for (std::size_t c = 0; c < n; ++c)
          comps[r] += (a[r][l] * b[l][c]) * Polynomial::variable(n, c);
    const auto map = HoloMap::from_components(comps);
    if (!check_a1(map).ok)
      continue;
    REQUIRE(check_a2(map).ok);
  }
}

TEST_CASE("level sets of the first example are lines, checked by evaluation") {
  const auto a = analyze(ex1());
  REQUIRE(a.kernel);
  Gen g(24);
  for (int i = 0; i < 50; ++i) {
    const auto x = g.point(4, 20);
    const Rational t = g.rational(20);
    std::vector<Rational> moved = x;
    for (std::size_t j = 0; j < 4; ++j)
      moved[j] += t * evaluate((*a.kernel)[0][j], x);
    for (const auto &c : a.map.components())
      REQUIRE(evaluate(c, moved) == evaluate(c, x));
  }
}

TEST_CASE("analysis of the first example") {
  const auto a = analyze(ex1());
  CHECK(a.k == 3);
  CHECK(a.a1_ok);
  CHECK(a.a2_ok);
  REQUIRE(a.kernel);
  CHECK(a.kernel->size() == 1);
  CHECK(a.singular_generators ==
        std::vector<Polynomial>{P("x2*x4 - x3"), P("-x2^2"), P("-x2")});
  const auto b = analyze(HoloMap::from_potential(P("x1^2 + x2^2 + x3^2 + x4^2")));
  CHECK_FALSE(b.kernel.has_value());
  CHECK(b.singular_generators.empty());
}

TEST_CASE("classification of points") {
  const auto a = analyze(ex1());
  CHECK(is_essential_singularity(a, std::vector<Rational>{1, 0, 0, 0}).kind ==
        PointKind::Singular);
  const auto regular = is_essential_singularity(a, std::vector<Rational>{1, 1, 0, 0});
  CHECK(regular.kind == PointKind::OnMaxRankStratum);
  REQUIRE(regular.value);
  CHECK(regular.value->coordinates == std::vector<Rational>{0, 0, 1, 1});
  // Constant kernel, Hessian rank drops on x2 = 0.
  const auto c = analyze(HoloMap::from_potential(P("x1*x2^2", parse_variable_names("x1,x2,x3"))));
  const auto e = is_essential_singularity(c, std::vector<Rational>{1, 0, 5});
  CHECK(e.kind == PointKind::Extendible);
  CHECK(e.value->coordinates == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("singular classification agrees with vanishing of all coordinates") {
  for (const auto &entry : catalog()) {
    const auto a = analyze(entry.map());
    if (!a.pluecker)
      continue;
    Gen g(25);
    const auto pieces = entry.pieces();
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> x;
      if (!pieces.empty() && i % 2 == 0) {
        const auto &piece = pieces[static_cast<std::size_t>(i / 2) % pieces.size()];
        x = piece.point_at(g.point(piece.dimension(), 10));
      } else {
        x = g.point(entry.n(), 10);
      }
      bool all_zero = true;
      for (const auto &c : a.pluecker->coordinates)
        all_zero = all_zero && evaluate(c, x) == 0;
      REQUIRE((is_essential_singularity(a, x).kind == PointKind::Singular) == all_zero);
    }
  }
}

TEST_CASE("limits along curves") {
  const auto a = analyze(ex1());
  const auto at = [&](std::vector<std::vector<Rational>> coeffs) {
    return limit_along_curve(a, CurveSpec(std::move(coeffs))).coordinates;
  };
  CHECK(at({{1, 0, 0, 0}, {0, 1, 1, 0}}) == std::vector<Rational>{1, 0, 0, 1});
  CHECK(at({{1, 0, 0, 0}, {0, 1, 0, 0}}) == std::vector<Rational>{0, 0, 0, 1});
  CHECK(at({{1, 0, 0, 0}, {0, 1, 5, 0}}) == std::vector<Rational>{1, 0, 0, Rational(1, 5)});
  // Approaching a regular point gives the value there.
  CHECK(at({{1, 1, 0, 0}, {1, 2, 3, 4}}) == std::vector<Rational>{0, 0, 1, 1});
  CHECK_THROWS_AS(at({{1, 0, 0, 0}, {1, 0, 0, 0}}), CurveInsideIndeterminacy);
  CHECK_THROWS_AS(at({{1, 0, 0}, {0, 1, 0}}), ArityMismatch);
  CHECK_THROWS_AS(CurveSpec({{1, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CurveSpec({{1, 0, 0, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("limits at the singular plane are tangent to it") {
  const auto a = analyze(ex1());
  const auto plane = AffineSubspace::coordinate_zero(4, {1, 2});
  Gen g(26);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> p{g.rational(), 0, 0, g.rational()};
    std::vector<Rational> v = g.point(4, 9);
    try {
      const auto lim = limit_along_curve(a, CurveSpec({p, v, g.point(4, 9)}));
      REQUIRE(check_tangency(lim, plane));
      ++checked;
    } catch (const CurveInsideIndeterminacy &) {
    }
  }
  CHECK(checked >= 5);
  CHECK_FALSE(check_tangency(span_point({{0, 1, 0, 0}}), plane));
  CHECK_THROWS_AS(check_tangency(span_point({{1, 0, 0}}), plane), std::invalid_argument);
  CHECK_THROWS_AS(check_tangency(span_point({{1, 0, 0, 0}}), AffineSubspace::point({0, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("Jacobian rank on strata") {
  const auto m = ex1();
  CHECK(rank_on_affine_set(m, AffineSubspace::coordinate_zero(4, {1, 2})) == 2);
  CHECK(rank_on_affine_set(m, AffineSubspace::coordinate_zero(4, {0, 1, 2})) == 1);
  CHECK(rank_on_affine_set(m, AffineSubspace::whole(4)) == 3);
  CHECK(rank_on_piece(m, Piece::from_equations({P("x2"), P("x3")}, 4)) == 2);
  CHECK_THROWS_AS(rank_on_affine_set(m, AffineSubspace::whole(3)), ArityMismatch);
}

TEST_CASE("dimension bounds") {
  CHECK(check_theorem1_bounds(4, 3, 2));
  CHECK_FALSE(check_theorem1_bounds(4, 3, 1));
  CHECK_FALSE(check_theorem1_bounds(4, 3, 3));
  CHECK(check_theorem1_bounds(7, 5, 5));
  CHECK_FALSE(check_theorem1_bounds(3, 2, 1));
  for (std::size_t n = 2; n < 12; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t d = 0; d <= n; ++d) {
        const std::size_t lo = std::max(k - 1, n - k + 1);
        REQUIRE(check_theorem1_bounds(n, k, d) == (lo <= d && d + 2 <= n));
      }
}

TEST_CASE("empty singular sets") {
  CHECK(generators_have_no_common_zero({P("3")}, 4));
  CHECK(generators_have_no_common_zero({P("x1"), P("x1 - 1")}, 4));
  CHECK_FALSE(generators_have_no_common_zero({P("x1"), P("x2")}, 4));
  CHECK_FALSE(generators_have_no_common_zero({P("x1^2 + 1")}, 4));
  CHECK(check_corollary(3, 2, {P("1", parse_variable_names("a,b,c"))}));
  CHECK_FALSE(check_corollary(4, 2, {P("x1")}));
  CHECK(check_corollary(4, 3, {P("x1")}));
}
