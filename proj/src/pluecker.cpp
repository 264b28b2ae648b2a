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

#include "affib/pluecker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace affib {

std::string tuple_key(const IndexTuple &t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

const Polynomial &PlueckerVector::at(const IndexTuple &t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t)
    throw std::out_of_range("no Plücker coordinate for tuple " + tuple_key(t));
  return coordinates[static_cast<std::size_t>(it - tuples.begin())];
}

std::vector<Polynomial> PlueckerVector::nonzero_coordinates() const {
  std::vector<Polynomial> out;
  for (const auto &c : coordinates)
    if (!c.is_zero())
      out.push_back(c);
  return out;
}

PlueckerVector pluecker_raw(const KernelBasis &basis) {
  if (basis.empty())
    throw std::invalid_argument("pluecker: empty basis");
  const std::size_t d = basis.size();
  const std::size_t n = basis[0].size();
  const std::size_t arity = basis[0][0].arity();
  PlueckerVector v;
  v.ambient = n;
  v.subspace_dim = d;
  v.tuples = combinations(n, d);
  for (const auto &cols : v.tuples) {
    PolyMatrix sub(d, d, arity);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        sub(i, j) = basis[i][cols[j]];
    v.coordinates.push_back(determinant(sub));
  }
  return v;
}

PlueckerVector reduce(PlueckerVector v) {
  v.coordinates = normalize_projective(std::move(v.coordinates));
  v.reduced = true;
  return v;
}

PlueckerVector pluecker(const KernelBasis &basis) { return reduce(pluecker_raw(basis)); }

GrassmannPoint make_grassmann_point(std::size_t n, std::size_t d,
                                    std::vector<Rational> coords) {
  GrassmannPoint g;
  g.ambient = n;
  g.subspace_dim = d;
  g.tuples = combinations(n, d);
  if (coords.size() != g.tuples.size())
    throw std::invalid_argument("Grassmann point: wrong number of coordinates");
  auto first = std::find_if(coords.begin(), coords.end(),
                            [](const Rational &q) { return q != 0; });
  if (first == coords.end())
    throw std::invalid_argument("Grassmann point: all coordinates vanish");
  const Rational scale = 1 / *first;
  for (auto &c : coords)
    c *= scale;
  g.coordinates = std::move(coords);
  return g;
}

Rational rational_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0)
        continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

GrassmannPoint span_point(const std::vector<std::vector<Rational>> &vectors) {
  if (vectors.empty())
    throw std::invalid_argument("span_point: no vectors");
  const std::size_t d = vectors.size();
  const std::size_t n = vectors[0].size();
  std::vector<Rational> coords;
  for (const auto &cols : combinations(n, d)) {
    std::vector<std::vector<Rational>> sub(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        sub[i][j] = vectors[i][cols[j]];
    coords.push_back(rational_determinant(std::move(sub)));
  }
  return make_grassmann_point(n, d, std::move(coords));
}

std::optional<GrassmannPoint> evaluate(const PlueckerVector &v,
                                       std::span<const Rational> point) {
  std::vector<Rational> coords;
  coords.reserve(v.coordinates.size());
  bool any = false;
  for (const auto &c : v.coordinates) {
    coords.push_back(evaluate(c, point));
    any = any || coords.back() != 0;
  }
  if (!any)
    return std::nullopt;
  return make_grassmann_point(v.ambient, v.subspace_dim, std::move(coords));
}

namespace {

// Coordinate of an arbitrary index sequence: zero on repeats, otherwise
// the sign of the sorting permutation times the sorted coordinate.
Rational signed_coordinate(const std::map<IndexTuple, Rational> &coords,
                           IndexTuple seq) {
  int parity = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j])
        return 0;
      if (seq[i] > seq[j])
        ++parity;
    }
  std::sort(seq.begin(), seq.end());
  const Rational &c = coords.at(seq);
  return parity % 2 ? Rational(-c) : c;
}

std::map<IndexTuple, Rational> coordinate_map(std::size_t n, std::size_t d,
                                              std::span<const Rational> coords) {
  const auto tuples = combinations(n, d);
  if (tuples.size() != coords.size())
    throw std::invalid_argument("wrong number of Plücker coordinates");
  std::map<IndexTuple, Rational> m;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    m.emplace(tuples[i], coords[i]);
  return m;
}

} // namespace

std::vector<std::vector<Rational>> basis_of(const GrassmannPoint &g) {
  const auto coords = coordinate_map(g.ambient, g.subspace_dim, g.coordinates);
  std::size_t chart = 0;
  while (g.coordinates[chart] == 0)
    ++chart;
  const IndexTuple &base = g.tuples[chart];
  const Rational &pivot = g.coordinates[chart];
  std::vector<std::vector<Rational>> rows(g.subspace_dim,
                                          std::vector<Rational>(g.ambient));
  for (std::size_t a = 0; a < g.subspace_dim; ++a)
    for (std::size_t j = 0; j < g.ambient; ++j) {
      IndexTuple seq = base;
      seq[a] = j;
      rows[a][j] = signed_coordinate(coords, std::move(seq)) / pivot;
    }
  return rows;
}

bool satisfies_pluecker_relations(std::size_t n, std::size_t d,
                                  std::span<const Rational> values) {
  if (d == 0 || d >= n)
    return true;
  const auto coords = coordinate_map(n, d, values);
  for (const auto &head : combinations(n, d - 1)) {
    for (const auto &tail : combinations(n, d + 1)) {
      Rational sum = 0;
      for (std::size_t l = 0; l <= d; ++l) {
        IndexTuple left = head;
        left.push_back(tail[l]);
        IndexTuple right;
        for (std::size_t m = 0; m <= d; ++m)
          if (m != l)
            right.push_back(tail[m]);
        const Rational term = signed_coordinate(coords, left) *
                              signed_coordinate(coords, right);
        sum += (l % 2) ? Rational(-term) : term;
      }
      if (sum != 0)
        return false;
    }
  }
  return true;
}

} // namespace affib
