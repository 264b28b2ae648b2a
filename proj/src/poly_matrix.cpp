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

#include "affib/poly_matrix.hpp"

#include "affib/rational_function.hpp"

#include <stdexcept>

namespace affib {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), arity_(arity),
      data_(rows * cols, Polynomial(arity)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("PolyMatrix needs at least one row and column");
}

PolyMatrix::PolyMatrix(std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("PolyMatrix needs at least one row and column");
  rows_ = rows.size();
  cols_ = rows[0].size();
  arity_ = rows[0][0].arity();
  data_.reserve(rows_ * cols_);
  for (auto &row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("PolyMatrix rows differ in length");
    for (auto &p : row) {
      if (p.arity() != arity_)
        throw ArityMismatch("PolyMatrix entries differ in arity");
      data_.push_back(std::move(p));
    }
  }
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, arity_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto &p : data_)
    if (!p.is_zero())
      return false;
  return true;
}

namespace {

void swap_rows(PolyMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    std::swap(m(a, c), m(b, c));
}

struct Elimination {
  EchelonForm form;
  bool odd_swaps = false;
};

Elimination eliminate(const PolyMatrix &input) {
  PolyMatrix m = input;
  std::vector<std::size_t> pivots;
  bool odd = false;
  Polynomial prev = Polynomial::constant(m.arity(), 1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (m(i, col).is_zero())
        continue;
      if (best == m.rows() || m(i, col).total_degree() < m(best, col).total_degree())
        best = i;
    }
    if (best == m.rows())
      continue;
    if (best != row) {
      swap_rows(m, row, best);
      odd = !odd;
    }
    const Polynomial pivot = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Polynomial below = m(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Polynomial v = pivot * m(i, j) - below * m(row, j);
        m(i, j) = divide_or_throw(v, prev);
      }
      m(i, col) = Polynomial(m.arity());
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return {EchelonForm{std::move(m), std::move(pivots)}, odd};
}

} // namespace

EchelonForm bareiss_echelon(const PolyMatrix &m) { return eliminate(m).form; }

std::size_t bareiss_rank(const PolyMatrix &m) { return eliminate(m).form.rank(); }

Polynomial determinant(const PolyMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  Elimination e = eliminate(m);
  const std::size_t n = m.rows();
  if (e.form.rank() < n)
    return Polynomial(m.arity());
  Polynomial d = e.form.matrix(n - 1, n - 1);
  return e.odd_swaps ? -d : d;
}

std::vector<std::vector<Rational>> evaluate(const PolyMatrix &m,
                                            std::span<const Rational> point) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = evaluate(m(r, c), point);
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty())
    return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0)
        continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> a,
                                                      std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (auto &x : a[rank])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0)
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] -= f * a[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_at_point(const PolyMatrix &m, std::span<const Rational> point) {
  return rational_rank(evaluate(m, point));
}

KernelBasis kernel_basis(const PolyMatrix &m) {
  const EchelonForm e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  const std::size_t k = e.rank();
  if (k == n)
    throw KernelEmpty("matrix has full column rank; kernel is trivial");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols)
    is_pivot[c] = true;

  KernelBasis basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<RationalFunction> v(n, RationalFunction::constant(m.arity(), 0));
    v[free] = RationalFunction::constant(m.arity(), 1);
    for (std::size_t i = k; i-- > 0;) {
      const std::size_t p = e.pivot_cols[i];
      RationalFunction s = RationalFunction::constant(m.arity(), 0);
      for (std::size_t j = p + 1; j < n; ++j)
        if (!e.matrix(i, j).is_zero() && !v[j].is_zero())
          s = s + RationalFunction(e.matrix(i, j)) * v[j];
      v[p] = -s / RationalFunction(e.matrix(i, p));
    }
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n)
    return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1))
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix &m, std::size_t r) {
  if (r < 1 || r > std::min(m.rows(), m.cols()))
    throw std::out_of_range("minors: order " + std::to_string(r) + " out of range");
  std::vector<Polynomial> out;
  const auto row_sets = combinations(m.rows(), r);
  const auto col_sets = combinations(m.cols(), r);
  for (const auto &rs : row_sets) {
    for (const auto &cs : col_sets) {
      PolyMatrix sub(r, r, m.arity());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          sub(i, j) = m(rs[i], cs[j]);
      out.push_back(determinant(sub));
    }
  }
  return out;
}

std::vector<Polynomial> apply(const PolyMatrix &m, std::span<const Polynomial> v) {
  if (v.size() != m.cols())
    throw std::invalid_argument("apply: vector length does not match columns");
  std::vector<Polynomial> out(m.rows(), Polynomial(m.arity()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] += m(r, c) * v[c];
  return out;
}

} // namespace affib
