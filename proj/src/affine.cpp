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

#include "affib/affine.hpp"

#include "affib/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace affib {

AffineSubspace::AffineSubspace(std::vector<Rational> basepoint,
                               std::vector<std::vector<Rational>> directions)
    : basepoint_(std::move(basepoint)), directions_(std::move(directions)) {
  for (const auto &d : directions_)
    if (d.size() != basepoint_.size())
      throw std::invalid_argument("affine subspace: direction length mismatch");
  if (rational_rank(directions_) != directions_.size())
    throw std::invalid_argument("affine subspace: directions are linearly dependent");
}

AffineSubspace AffineSubspace::point(std::vector<Rational> p) {
  return AffineSubspace(std::move(p), {});
}

AffineSubspace AffineSubspace::whole(std::size_t n) {
  std::vector<std::vector<Rational>> dirs(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    dirs[i][i] = 1;
  return AffineSubspace(std::vector<Rational>(n, Rational(0)), std::move(dirs));
}

AffineSubspace AffineSubspace::coordinate_zero(std::size_t n,
                                               const std::vector<std::size_t> &zero) {
  std::vector<bool> fixed(n, false);
  for (auto i : zero)
    fixed.at(i) = true;
  std::vector<std::vector<Rational>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    if (fixed[i])
      continue;
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    dirs.push_back(std::move(e));
  }
  return AffineSubspace(std::vector<Rational>(n, Rational(0)), std::move(dirs));
}

std::vector<Polynomial> AffineSubspace::parametrization() const {
  const std::size_t d = dimension();
  std::vector<Polynomial> out;
  out.reserve(ambient());
  for (std::size_t i = 0; i < ambient(); ++i) {
    Polynomial c = Polynomial::constant(d, basepoint_[i]);
    for (std::size_t j = 0; j < d; ++j)
      c += Polynomial::variable(d, j) * directions_[j][i];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Polynomial> AffineSubspace::equations() const {
  const std::size_t n = ambient();
  std::vector<Polynomial> eqs;
  for (const auto &normal : rational_nullspace(directions_, n)) {
    Polynomial e(n);
    Rational offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      e += Polynomial::variable(n, i) * normal[i];
      offset += normal[i] * basepoint_[i];
    }
    eqs.push_back(e - Polynomial::constant(n, offset));
  }
  return eqs;
}

bool AffineSubspace::contains(std::span<const Rational> p) const {
  if (p.size() != ambient())
    throw ArityMismatch("affine subspace: point has wrong length");
  for (const auto &e : equations())
    if (evaluate(e, p) != 0)
      return false;
  return true;
}

bool AffineSubspace::same_set(const AffineSubspace &other) const {
  if (ambient() != other.ambient() || dimension() != other.dimension())
    return false;
  if (!contains(other.basepoint()))
    return false;
  auto stacked = directions_;
  stacked.insert(stacked.end(), other.directions().begin(), other.directions().end());
  return rational_rank(std::move(stacked)) == dimension();
}

std::size_t affine_dimension(const AffineSubspace &s) { return s.dimension(); }

std::optional<AffineSubspace> solve_linear(const std::vector<Polynomial> &equations,
                                           std::size_t n) {
  // Augmented rows [a_1 .. a_n | b] for a.x = b.
  std::vector<std::vector<Rational>> rows;
  for (const auto &e : equations) {
    if (e.arity() != n)
      throw ArityMismatch("solve_linear: equation arity mismatch");
    if (e.total_degree() > 1)
      throw InputError("solve_linear: equation is not affine-linear");
    std::vector<Rational> row(n + 1, Rational(0));
    for (const auto &[m, c] : e.terms()) {
      if (m.is_one()) {
        row[n] = -c;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] == 1)
          row[i] = c;
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[rank]);
    const Rational inv = 1 / rows[rank][c];
    for (auto &x : rows[rank])
      x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0)
        continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= n; ++j)
        rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][n] != 0)
      return std::nullopt;

  std::vector<Rational> base(n, Rational(0));
  std::vector<std::vector<Rational>> coeffs;
  for (std::size_t i = 0; i < rank; ++i) {
    base[pivots[i]] = rows[i][n];
    coeffs.emplace_back(rows[i].begin(), rows[i].begin() + static_cast<long>(n));
  }
  return AffineSubspace(std::move(base), rational_nullspace(std::move(coeffs), n));
}

std::optional<AffineSubspace> intersect(const AffineSubspace &a, const AffineSubspace &b) {
  if (a.ambient() != b.ambient())
    throw ArityMismatch("intersect: ambient dimensions differ");
  auto eqs = a.equations();
  auto more = b.equations();
  eqs.insert(eqs.end(), more.begin(), more.end());
  return solve_linear(eqs, a.ambient());
}

std::optional<Piece> Piece::try_from_equations(std::vector<Polynomial> equations,
                                               std::size_t n) {
  Piece piece;
  piece.ambient_ = n;
  for (auto &e : equations) {
    if (e.arity() != n)
      throw ArityMismatch("piece equation arity mismatch");
    if (!e.is_zero())
      piece.equations_.push_back(std::move(e));
  }

  std::vector<Polynomial> subs;
  for (std::size_t i = 0; i < n; ++i)
    subs.push_back(Polynomial::variable(n, i));
  std::vector<bool> eliminated(n, false);

  for (;;) {
    std::vector<Polynomial> reduced;
    for (const auto &e : piece.equations_) {
      Polynomial r = compose(e, subs);
      if (r.is_zero())
        continue;
      if (r.is_constant())
        return std::nullopt;
      reduced.push_back(std::move(r));
    }
    if (reduced.empty())
      break;

    std::size_t var = n;
    Polynomial solved;
    for (const auto &r : reduced) {
      for (std::size_t v = 0; v < n && var == n; ++v) {
        if (r.degree_in(v) != 1)
          continue;
        const auto cs = coefficients_in(r, v);
        if (!cs[1].is_constant())
          continue;
        var = v;
        solved = cs[0] * Rational(-1 / cs[1].constant_term());
      }
      if (var != n)
        break;
    }
    if (var == n)
      throw InputError("piece equations cannot be solved for a coordinate; "
                       "give the piece as a graph such as z = v*t");

    std::vector<Polynomial> step;
    for (std::size_t i = 0; i < n; ++i)
      step.push_back(i == var ? solved : Polynomial::variable(n, i));
    for (auto &s : subs)
      s = compose(s, step);
    eliminated[var] = true;
  }

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!eliminated[i])
      free.push_back(i);
  const std::size_t d = free.size();
  std::vector<Polynomial> to_params(n, Polynomial(d));
  for (std::size_t j = 0; j < d; ++j)
    to_params[free[j]] = Polynomial::variable(d, j);
  for (const auto &s : subs)
    piece.param_.push_back(compose(s, to_params));
  piece.free_ = std::move(free);
  piece.dim_ = d;
  return piece;
}

Piece Piece::from_equations(std::vector<Polynomial> equations, std::size_t n) {
  auto p = try_from_equations(std::move(equations), n);
  if (!p)
    throw InputError("piece equations have no common solution");
  return std::move(*p);
}

Piece Piece::from_affine(const AffineSubspace &s) {
  return from_equations(s.equations(), s.ambient());
}

bool Piece::contains(std::span<const Rational> p) const {
  if (p.size() != ambient_)
    throw ArityMismatch("piece: point has wrong length");
  for (const auto &e : equations_)
    if (evaluate(e, p) != 0)
      return false;
  return true;
}

std::optional<std::vector<Rational>> Piece::parameters_of(std::span<const Rational> p) const {
  if (p.size() != ambient_)
    throw ArityMismatch("piece: point has wrong length");
  std::vector<Rational> params;
  for (auto i : free_)
    params.push_back(p[i]);
  const auto back = point_at(params);
  if (!std::equal(back.begin(), back.end(), p.begin()))
    return std::nullopt;
  return params;
}

std::vector<Rational> Piece::point_at(std::span<const Rational> params) const {
  std::vector<Rational> p;
  p.reserve(ambient_);
  for (const auto &c : param_)
    p.push_back(evaluate(c, params));
  return p;
}

AffineSubspace Piece::tangent_at(std::span<const Rational> params) const {
  std::vector<std::vector<Rational>> dirs;
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<Rational> d;
    for (const auto &c : param_)
      d.push_back(evaluate(partial_derivative(c, j), params));
    dirs.push_back(std::move(d));
  }
  return AffineSubspace(point_at(params), std::move(dirs));
}

std::optional<AffineSubspace> Piece::as_affine() const {
  for (const auto &c : param_)
    if (c.total_degree() > 1)
      return std::nullopt;
  std::vector<Rational> base;
  std::vector<std::vector<Rational>> dirs(dim_, std::vector<Rational>(ambient_));
  for (std::size_t i = 0; i < ambient_; ++i) {
    base.push_back(param_[i].constant_term());
    for (std::size_t j = 0; j < dim_; ++j) {
      Monomial m(dim_);
      m[j] = 1;
      dirs[j][i] = param_[i].coefficient(m);
    }
  }
  return AffineSubspace(std::move(base), std::move(dirs));
}

std::optional<AffineSubspace> intersect(const Piece &a, const Piece &b) {
  if (a.ambient() != b.ambient())
    throw ArityMismatch("intersect: ambient dimensions differ");
  auto eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  auto p = Piece::try_from_equations(std::move(eqs), a.ambient());
  if (!p)
    return std::nullopt;
  auto affine = p->as_affine();
  if (!affine)
    throw Error("intersection of pieces is not an affine subspace");
  return affine;
}

} // namespace affib
