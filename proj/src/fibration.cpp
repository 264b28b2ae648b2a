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

#include "affib/fibration.hpp"

#include "affib/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace affib {

HoloMap HoloMap::from_potential(Polynomial psi) {
  const std::size_t n = psi.arity();
  if (n < 2)
    throw std::invalid_argument("potential needs at least two variables");
  HoloMap map;
  for (std::size_t i = 0; i < n; ++i)
    map.components_.push_back(partial_derivative(psi, i));
  map.potential_ = std::move(psi);
  return map;
}

HoloMap HoloMap::from_components(std::vector<Polynomial> components) {
  const std::size_t n = components.size();
  if (n < 1)
    throw std::invalid_argument("map needs at least one component");
  for (const auto &c : components)
    if (c.arity() != n)
      throw ArityMismatch("map has " + std::to_string(n) +
                          " components but a component has arity " +
                          std::to_string(c.arity()));
  HoloMap map;
  map.components_ = std::move(components);
  return map;
}

PolyMatrix HoloMap::jacobian() const {
  PolyMatrix j(n(), n(), n());
  for (std::size_t r = 0; r < n(); ++r)
    for (std::size_t c = 0; c < n(); ++c)
      j(r, c) = partial_derivative(components_[r], c);
  return j;
}

bool is_symmetric(const PolyMatrix &m) {
  if (m.rows() != m.cols())
    return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r))
        return false;
  return true;
}

A1Result check_a1(const HoloMap &map) {
  const std::size_t k = bareiss_rank(map.jacobian());
  return {k, k >= 1 && k + 1 <= map.n()};
}

A2Result check_a2(const HoloMap &map, const KernelBasis &kernel) {
  const std::size_t n = map.n();
  const Polynomial t = Polynomial::variable(n + 1, n);
  std::vector<Polynomial> lifted;
  for (const auto &g : map.components())
    lifted.push_back(extend_arity(g, n + 1));

  for (const auto &w : kernel) {
    std::vector<Polynomial> shifted;
    for (std::size_t i = 0; i < n; ++i)
      shifted.push_back(Polynomial::variable(n + 1, i) + t * extend_arity(w[i], n + 1));
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial defect = compose(map.components()[j], shifted) - lifted[j];
      if (!defect.is_zero())
        return {false, std::move(defect)};
    }
  }
  return {true, std::nullopt};
}

A2Result check_a2(const HoloMap &map) {
  if (!check_a1(map).ok)
    throw Error("check_a2 requires condition (A1)");
  return check_a2(map, kernel_basis(map.jacobian()));
}

FibrationAnalysis analyze(const HoloMap &map) {
  FibrationAnalysis a{.map = map, .jacobian = map.jacobian()};
  const A1Result a1 = check_a1(map);
  a.k = a1.k;
  a.a1_ok = a1.ok;
  if (!a.a1_ok)
    return a;
  a.kernel = kernel_basis(a.jacobian);
  a.pluecker = pluecker(*a.kernel);
  const A2Result a2 = check_a2(map, *a.kernel);
  a.a2_ok = a2.ok;
  a.a2_witness = a2.witness;
  a.singular_generators = a.pluecker->nonzero_coordinates();
  return a;
}

namespace {

const PlueckerVector &require_pluecker(const FibrationAnalysis &analysis) {
  if (!analysis.pluecker)
    throw Error("no kernel fibration: condition (A1) does not hold");
  return *analysis.pluecker;
}

} // namespace

PointClassification is_essential_singularity(const FibrationAnalysis &analysis,
                                             std::span<const Rational> point) {
  const PlueckerVector &pv = require_pluecker(analysis);
  if (point.size() != analysis.map.n())
    throw ArityMismatch("point has wrong number of coordinates");
  auto value = evaluate(pv, point);
  if (!value)
    return {PointKind::Singular, std::nullopt};
  const bool max_rank = rank_at_point(analysis.jacobian, point) == analysis.k;
  return {max_rank ? PointKind::OnMaxRankStratum : PointKind::Extendible, std::move(value)};
}

CurveSpec::CurveSpec(std::vector<std::vector<Rational>> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.front().empty())
    throw std::invalid_argument("curve needs a limit point");
  bool moves = false;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].size() != coeffs_.front().size())
      throw std::invalid_argument("curve coefficient vectors differ in length");
    if (j > 0)
      moves = moves || std::any_of(coeffs_[j].begin(), coeffs_[j].end(),
                                   [](const Rational &q) { return q != 0; });
  }
  if (!moves)
    throw std::invalid_argument("curve is constant");
}

std::vector<Polynomial> CurveSpec::coordinates() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ambient(); ++i) {
    Polynomial c(1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      c.add_term(Monomial(std::vector<unsigned>{static_cast<unsigned>(j)}), coeffs_[j][i]);
    out.push_back(std::move(c));
  }
  return out;
}

GrassmannPoint limit_along_curve(const FibrationAnalysis &analysis, const CurveSpec &curve) {
  const PlueckerVector &pv = require_pluecker(analysis);
  if (curve.ambient() != analysis.map.n())
    throw ArityMismatch("curve lives in a space of the wrong dimension");
  const std::vector<Polynomial> xi = curve.coordinates();
  std::vector<UPoly> along;
  std::size_t lowest = 0;
  bool any = false;
  for (const auto &c : pv.coordinates) {
    along.push_back(UPoly::from_polynomial(compose(c, xi)));
    if (along.back().is_zero())
      continue;
    const std::size_t ord = along.back().order();
    lowest = any ? std::min(lowest, ord) : ord;
    any = true;
  }
  if (!any)
    throw CurveInsideIndeterminacy(
        "curve lies inside the indeterminacy locus of the kernel map");
  std::vector<Rational> value;
  for (const auto &u : along)
    value.push_back(u.coefficient(lowest));
  return make_grassmann_point(pv.ambient, pv.subspace_dim, std::move(value));
}

bool check_tangency(const GrassmannPoint &limit, const AffineSubspace &piece) {
  if (limit.ambient != piece.ambient())
    throw std::invalid_argument("tangency: ambient dimensions differ");
  if (piece.dimension() < limit.subspace_dim)
    throw std::invalid_argument("tangency: piece of dimension " +
                                std::to_string(piece.dimension()) +
                                " cannot contain a subspace of dimension " +
                                std::to_string(limit.subspace_dim));
  auto stacked = piece.directions();
  for (auto &row : basis_of(limit))
    stacked.push_back(std::move(row));
  return rational_rank(std::move(stacked)) == piece.dimension();
}

namespace {

std::size_t restricted_rank(const HoloMap &map, const std::vector<Polynomial> &param,
                            std::size_t dim) {
  const PolyMatrix j = map.jacobian();
  if (dim == 0) {
    std::vector<Rational> p;
    for (const auto &c : param)
      p.push_back(c.constant_term());
    return rank_at_point(j, p);
  }
  PolyMatrix r(j.rows(), j.cols(), dim);
  for (std::size_t a = 0; a < j.rows(); ++a)
    for (std::size_t b = 0; b < j.cols(); ++b)
      r(a, b) = compose(j(a, b), param);
  return bareiss_rank(r);
}

} // namespace

std::size_t rank_on_affine_set(const HoloMap &map, const AffineSubspace &piece) {
  if (piece.ambient() != map.n())
    throw ArityMismatch("affine set lives in a space of the wrong dimension");
  return restricted_rank(map, piece.parametrization(), piece.dimension());
}

std::size_t rank_on_piece(const HoloMap &map, const Piece &piece) {
  if (piece.ambient() != map.n())
    throw ArityMismatch("piece lives in a space of the wrong dimension");
  return restricted_rank(map, piece.parametrization(), piece.dimension());
}

bool check_theorem1_bounds(std::size_t n, std::size_t k, std::size_t d) {
  if (n < 2)
    return false;
  const std::size_t lower = std::max(k >= 1 ? k - 1 : 0, n - k + 1);
  return lower <= d && d <= n - 2;
}

bool generators_have_no_common_zero(const std::vector<Polynomial> &generators,
                                    std::size_t n) {
  bool all_linear = true;
  for (const auto &g : generators) {
    if (!g.is_zero() && g.is_constant())
      return true;
    all_linear = all_linear && g.total_degree() <= 1;
  }
  if (generators.empty() || !all_linear)
    return false;
  return !solve_linear(generators, n).has_value();
}

bool check_corollary(std::size_t n, std::size_t k,
                     const std::vector<Polynomial> &singular_generators) {
  if (n > 3 && k > 2)
    return true;
  const std::size_t arity = singular_generators.empty() ? n : singular_generators[0].arity();
  return generators_have_no_common_zero(singular_generators, arity);
}

} // namespace affib
