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

#include "affib/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace affib {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

UPoly UPoly::constant(const Rational &c) { return UPoly({c}); }

UPoly UPoly::from_polynomial(const Polynomial &p) {
  if (p.arity() > 1)
    throw ArityMismatch("UPoly::from_polynomial expects arity <= 1");
  if (p.arity() == 0)
    return constant(p.constant_term());
  std::vector<Rational> c(p.degree_in(0) + 1);
  for (const auto &[m, coeff] : p.terms())
    c[m[0]] = coeff;
  return UPoly(std::move(c));
}

Rational UPoly::coefficient(std::size_t d) const {
  return d < c_.size() ? c_[d] : Rational(0);
}

std::size_t UPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      return i;
  throw std::logic_error("order of zero polynomial");
}

Rational UPoly::operator()(const Rational &t) const {
  Rational v = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    v = v * t + c_[i];
  return v;
}

UPoly operator+(const UPoly &a, const UPoly &b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly &a, const UPoly &b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(i) - b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b) {
  if (b.is_zero())
    throw std::domain_error("UPoly division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db)
    return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[i] / b.leading();
    q[i - db] = f;
    if (f == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly derivative(const UPoly &p) {
  if (p.degree() < 1)
    return {};
  std::vector<Rational> c(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    c[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(c));
}

namespace {

UPoly monic(const UPoly &p) {
  if (p.is_zero())
    return p;
  std::vector<Rational> c = p.coeffs();
  const Rational l = p.leading();
  for (auto &x : c)
    x /= l;
  return UPoly(std::move(c));
}

int sign_variations(const std::vector<UPoly> &seq, const Rational &x) {
  int changes = 0, last = 0;
  for (const auto &s : seq) {
    const int v = sgn(s(x));
    if (v == 0)
      continue;
    if (last != 0 && v != last)
      ++changes;
    last = v;
  }
  return changes;
}

} // namespace

UPoly gcd(const UPoly &a, const UPoly &b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UPoly square_free_part(const UPoly &p) {
  if (p.degree() < 1)
    return monic(p);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

int distinct_root_count(const UPoly &p) {
  return std::max(0, square_free_part(p).degree());
}

std::vector<Rational> rational_roots(const UPoly &p) {
  if (p.is_zero())
    throw std::invalid_argument("rational_roots of zero polynomial");
  const UPoly f = square_free_part(p);
  std::vector<Rational> roots;
  if (f.degree() < 1)
    return roots;

  // Any rational root r of f satisfies r * lc == integer, where lc is the
  // leading coefficient of f scaled to coprime integer coefficients.
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto &c : f.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Rational lc_scaled = f.leading() * scale;
  const Integer lc = abs(lc_scaled.get_num());

  std::vector<UPoly> sturm{f, derivative(f)};
  while (!sturm.back().is_zero()) {
    UPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero())
      break;
    sturm.push_back(UPoly() - r);
  }

  Rational bound = 0;
  for (const auto &c : f.coeffs())
    bound = std::max(bound, Rational(abs(c / f.leading())));
  bound += 2;

  auto split_point = [&](const Rational &a, const Rational &b) {
    Rational m = (a + b) / 2;
    while (f(m) == 0)
      m = (m + b) / 2;
    return m;
  };

  struct Interval {
    Rational lo, hi;
  };
  std::vector<Interval> work{{-bound, bound}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    const int count = sign_variations(sturm, iv.lo) - sign_variations(sturm, iv.hi);
    if (count == 0)
      continue;
    if (count > 1) {
      const Rational m = split_point(iv.lo, iv.hi);
      work.push_back({iv.lo, m});
      work.push_back({m, iv.hi});
      continue;
    }
    // Exactly one simple real root in (lo, hi]; endpoints are not roots.
    Rational lo = iv.lo, hi = iv.hi;
    const int sign_lo = sgn(f(lo));
    for (;;) {
      if ((hi - lo) * lc < 1) {
        Rational lo_scaled = lo * lc, hi_scaled = hi * lc;
        Integer first, last;
        mpz_cdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(),
                   lo_scaled.get_den_mpz_t());
        mpz_fdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(),
                   hi_scaled.get_den_mpz_t());
        for (Integer k = first; k <= last; ++k) {
          Rational cand(k, lc);
          cand.canonicalize();
          if (f(cand) == 0)
            roots.push_back(cand);
        }
        break;
      }
      const Rational m = (lo + hi) / 2;
      const int sm = sgn(f(m));
      if (sm == 0) {
        roots.push_back(m);
        break;
      }
      if (sm == sign_lo)
        lo = m;
      else
        hi = m;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace affib
