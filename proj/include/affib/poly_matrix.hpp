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

#include <vector>

namespace affib {

/// Rectangular matrix of polynomials sharing one arity.
class PolyMatrix {
public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity);
  explicit PolyMatrix(std::vector<std::vector<Polynomial>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t arity() const { return arity_; }

  const Polynomial &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Polynomial &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  PolyMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const PolyMatrix &, const PolyMatrix &) = default;

private:
  std::size_t rows_, cols_, arity_;
  std::vector<Polynomial> data_;
};

/// Fraction-free row echelon form. Row i holds pivot `pivot_cols[i]`;
/// rows past rank() are zero. Every entry is a minor of the input.
struct EchelonForm {
  PolyMatrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss elimination over the polynomial ring. Pivots are taken column
/// by column; among candidate rows the entry of lowest total degree wins,
/// ties go to the lowest row index.
EchelonForm bareiss_echelon(const PolyMatrix &m);

/// Rank over the field of rational functions.
std::size_t bareiss_rank(const PolyMatrix &m);

/// Determinant of a square matrix, fraction-free.
Polynomial determinant(const PolyMatrix &m);

/// Entry-wise evaluation.
std::vector<std::vector<Rational>> evaluate(const PolyMatrix &m,
                                            std::span<const Rational> point);

/// Exact rank of a rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Basis of {x : rows * x = 0}, one vector per free column of the reduced
/// row echelon form, free entry 1.
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> rows,
                                                      std::size_t cols);

/// Rank of m evaluated at a rational point.
std::size_t rank_at_point(const PolyMatrix &m, std::span<const Rational> point);

/// Basis of the right kernel over the fraction field, each vector
/// denominator-cleared and normalized with normalize_projective. One vector
/// per free column, free columns in increasing order.
using KernelBasis = std::vector<std::vector<Polynomial>>;

class KernelEmpty : public Error {
public:
  using Error::Error;
};

KernelBasis kernel_basis(const PolyMatrix &m);

/// All r x r minors, ordered by row tuple then column tuple (both lex).
std::vector<Polynomial> minors(const PolyMatrix &m, std::size_t r);

/// M * v with v a column of polynomials.
std::vector<Polynomial> apply(const PolyMatrix &m, std::span<const Polynomial> v);

/// Index tuples 0 <= i_1 < ... < i_k < n in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

} // namespace affib
