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


// Random generators for property tests. Deterministic in the seed.

#pragma once

#include "affib/poly_matrix.hpp"
#include "affib/polynomial.hpp"

#include <random>
#include <vector>

namespace affib::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 9) {
    const long den = integer(1, 4);
    return Rational(integer(-bound, bound)) / den;
  }
  Rational nonzero_rational(long bound = 9) {
    Rational r;
    do
      r = rational(bound);
    while (r == 0);
    return r;
  }
  std::vector<Rational> point(std::size_t n, long bound = 50) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i)
      p.push_back(Rational(integer(-bound, bound)) / integer(1, 3));
    return p;
  }

  Polynomial polynomial(std::size_t arity, std::size_t max_terms = 5, unsigned max_exp = 3) {
    Polynomial p(arity);
    const auto terms = static_cast<std::size_t>(integer(0, long(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<unsigned> e(arity);
      for (auto &x : e)
        x = static_cast<unsigned>(integer(0, max_exp));
      p.add_term(Monomial(std::move(e)), rational());
    }
    return p;
  }

  /// rows x cols with generic rank at most `inner`, built as a product.
  PolyMatrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t inner,
                             std::size_t arity) {
    if (inner == 0)
      return PolyMatrix(rows, cols, arity);
    PolyMatrix a(rows, inner, arity), b(inner, cols, arity), m(rows, cols, arity);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < inner; ++j)
        a(i, j) = polynomial(arity, 2, 1);
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        b(i, j) = polynomial(arity, 2, 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t l = 0; l < inner; ++l)
          m(i, j) += a(i, l) * b(l, j);
    return m;
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace affib::testing
