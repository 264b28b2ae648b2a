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

#include "affib/polynomial.hpp"

#include "affib/upoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace affib {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exps_)
    d += e;
  return d;
}

bool Monomial::divides(const Monomial &other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial &d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] -= d.exps_[i];
  return r;
}

int grevlex_compare(const Monomial &a, const Monomial &b) {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db)
    return da > db ? 1 : -1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void require_same_arity(const Polynomial &a, const Polynomial &b) {
  if (a.arity() != b.arity())
    throw ArityMismatch("polynomial arity mismatch: " +
                        std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
}

} // namespace

Polynomial Polynomial::constant(std::size_t arity, const Rational &c) {
  Polynomial p(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity)
    throw std::out_of_range("variable index out of range");
  Monomial m(arity);
  m[index] = 1;
  return term(std::move(m), Rational(1));
}

Polynomial Polynomial::term(Monomial m, const Rational &c) {
  Polynomial p(m.arity());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(terms_.begin()->first.total_degree());
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m[var]);
  return d;
}

const Monomial &Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational &Polynomial::leading_coefficient() const {
  if (terms_.empty())
    throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(arity_));
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (m.arity() != arity_)
    throw ArityMismatch("monomial arity mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  require_same_arity(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  require_same_arity(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
  *this = *this * other;
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  require_same_arity(a, b);
  Polynomial r(a.arity());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms())
      r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }

Polynomial add(const Polynomial &a, const Polynomial &b) { return a + b; }
Polynomial mul(const Polynomial &a, const Polynomial &b) { return a * b; }

Polynomial pow(const Polynomial &p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.arity(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial &p, std::size_t var) {
  if (var >= p.arity())
    throw std::out_of_range("partial_derivative: variable index " +
                            std::to_string(var) + " out of range");
  Polynomial r(p.arity());
  for (const auto &[m, c] : p.terms()) {
    if (m[var] == 0)
      continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational evaluate(const Polynomial &p, std::span<const Rational> point) {
  if (point.size() != p.arity())
    throw ArityMismatch("evaluate: point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has arity " +
                        std::to_string(p.arity()));
  Rational sum = 0;
  for (const auto &[m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0)
        continue;
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(f.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      t *= f;
    }
    sum += t;
  }
  return sum;
}

Polynomial compose(const Polynomial &p, std::span<const Polynomial> args) {
  if (args.size() != p.arity())
    throw ArityMismatch("compose: expected " + std::to_string(p.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  const std::size_t out_arity = args.empty() ? 0 : args[0].arity();
  for (const auto &a : args)
    if (a.arity() != out_arity)
      throw ArityMismatch("compose: arguments differ in arity");

  // powers[i][e] = args[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(args.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial & {
    auto &cache = powers[i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(out_arity, 1));
    while (cache.size() <= e)
      cache.push_back(cache.back() * args[i]);
    return cache[e];
  };

  Polynomial result(out_arity);
  for (const auto &[m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(out_arity, c);
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] > 0)
        t = t * power(i, m[i]);
    result += t;
  }
  return result;
}

Polynomial extend_arity(const Polynomial &p, std::size_t arity) {
  if (arity < p.arity())
    throw ArityMismatch("extend_arity: cannot shrink");
  Polynomial r(arity);
  for (const auto &[m, c] : p.terms()) {
    std::vector<unsigned> e = m.exponents();
    e.resize(arity, 0);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

std::optional<Polynomial> divide_exact(const Polynomial &a,
                                       const Polynomial &b) {
  require_same_arity(a, b);
  if (b.is_zero())
    throw std::domain_error("division by the zero polynomial");
  Polynomial q(a.arity());
  Polynomial r = a;
  const Monomial &lb = b.leading_monomial();
  const Rational &cb = b.leading_coefficient();
  // With a single divisor the leading term of the remainder must be
  // divisible by lt(b) at every step, or b does not divide a.
  while (!r.is_zero()) {
    const Monomial &lr = r.leading_monomial();
    if (!lb.divides(lr))
      return std::nullopt;
    Polynomial t = Polynomial::term(lr / lb, r.leading_coefficient() / cb);
    r -= t * b;
    q += t;
  }
  return q;
}

Polynomial divide_or_throw(const Polynomial &a, const Polynomial &b) {
  auto q = divide_exact(a, b);
  if (!q)
    throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

bool divides(const Polynomial &d, const Polynomial &p) {
  return divide_exact(p, d).has_value();
}

namespace {

// Returns (lcm of denominators, gcd of numerators) of the coefficients.
std::pair<Integer, Integer> coefficient_scales(const Polynomial &p) {
  Integer l = 1, g = 0;
  for (const auto &[m, c] : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  return {l, g};
}

} // namespace

Rational rational_content(const Polynomial &p) {
  if (p.is_zero())
    throw std::invalid_argument("rational_content of zero polynomial");
  auto [l, g] = coefficient_scales(p);
  Rational c(g, l);
  c.canonicalize();
  if (p.leading_coefficient() < 0)
    c = -c;
  return c;
}

Polynomial primitive_normalized(const Polynomial &p) {
  if (p.is_zero())
    return p;
  Rational c = rational_content(p);
  return p * Rational(1 / c);
}

std::vector<Polynomial> coefficients_in(const Polynomial &p, std::size_t var) {
  std::vector<Polynomial> out(p.degree_in(var) + 1, Polynomial(p.arity()));
  if (p.is_zero())
    return {};
  for (const auto &[m, c] : p.terms()) {
    Monomial r = m;
    const unsigned d = r[var];
    r[var] = 0;
    out[d].add_term(r, c);
  }
  return out;
}

namespace {

Polynomial monomial_gcd(const Polynomial &mono, const Polynomial &p) {
  Monomial g = mono.leading_monomial();
  for (const auto &[m, c] : p.terms())
    for (std::size_t i = 0; i < g.arity(); ++i)
      g[i] = std::min(g[i], m[i]);
  return Polynomial::term(std::move(g), Rational(1));
}

Polynomial content_in(const Polynomial &p, std::size_t var) {
  Polynomial g(p.arity());
  for (const auto &c : coefficients_in(p, var)) {
    if (c.is_zero())
      continue;
    g = gcd(g, c);
    if (g.is_constant())
      break;
  }
  return g;
}

UPoly restrict_to_line(const Polynomial &p, const std::vector<Polynomial> &line) {
  return UPoly::from_polynomial(compose(p, line));
}

// Sound coprimality certificate: if a restricted to a line keeps its full
// degree, every factor of a does too, so a constant univariate gcd means
// the multivariate gcd is constant.
bool certified_coprime(const Polynomial &a, const Polynomial &b) {
  std::mt19937_64 rng(0x5eed5eedULL);
  const std::size_t n = a.arity();
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Polynomial> line;
    line.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long base = static_cast<long>(rng() % 61) - 30;
      const long dir = static_cast<long>(rng() % 61) - 30;
      Polynomial l = Polynomial::constant(1, base);
      l.add_term(Monomial(std::vector<unsigned>{1}), dir);
      line.push_back(std::move(l));
    }
    const UPoly ra = restrict_to_line(a, line);
    if (ra.degree() != a.total_degree())
      continue;
    const UPoly rb = restrict_to_line(b, line);
    if (gcd(ra, rb).degree() == 0)
      return true;
  }
  return false;
}

// p viewed in Q[y][other variables]: monomial in the others -> polynomial in y.
using YCoeffs = std::map<Monomial, UPoly, GrevlexGreater>;

YCoeffs split_off(const Polynomial &p, std::size_t y) {
  std::map<Monomial, std::vector<Rational>, GrevlexGreater> acc;
  for (const auto &[m, c] : p.terms()) {
    Monomial x = m;
    const unsigned d = x[y];
    x[y] = 0;
    auto &v = acc[x];
    if (v.size() <= d)
      v.resize(d + 1);
    v[d] = c;
  }
  YCoeffs out;
  for (auto &[x, v] : acc)
    out.emplace(x, UPoly(std::move(v)));
  return out;
}

Polynomial join(const YCoeffs &cs, std::size_t y, std::size_t n) {
  Polynomial p(n);
  for (const auto &[x, u] : cs)
    for (std::size_t d = 0; d < u.coeffs().size(); ++d)
      if (u.coeffs()[d] != 0) {
        Monomial m = x;
        m[y] = static_cast<unsigned>(d);
        p.add_term(m, u.coeffs()[d]);
      }
  return p;
}

Polynomial in_variable(const UPoly &u, std::size_t y, std::size_t n) {
  return join(YCoeffs{{Monomial(n), u}}, y, n);
}

UPoly content_y(const YCoeffs &cs) {
  UPoly g;
  for (const auto &[x, u] : cs) {
    g = gcd(g, u);
    if (g.degree() == 0)
      break;
  }
  return g;
}

// Divides out the content in Q[y]; returns the content.
UPoly make_primitive_y(YCoeffs &cs) {
  const UPoly c = content_y(cs);
  for (auto &[x, u] : cs)
    u = divmod(u, c).first;
  return c;
}

// p at y = a, in the remaining variables.
Polynomial eval_drop(const Polynomial &p, std::size_t y, const Rational &a) {
  Polynomial out(p.arity() - 1);
  std::vector<Rational> powers{Rational(1)};
  for (const auto &[m, c] : p.terms()) {
    while (powers.size() <= m[y])
      powers.push_back(powers.back() * a);
    std::vector<unsigned> e;
    e.reserve(p.arity() - 1);
    for (std::size_t i = 0; i < p.arity(); ++i)
      if (i != y)
        e.push_back(m[i]);
    out.add_term(Monomial(std::move(e)), c * powers[m[y]]);
  }
  return out;
}

Polynomial lift(const Polynomial &q, std::size_t y) {
  Polynomial out(q.arity() + 1);
  for (const auto &[m, c] : q.terms()) {
    std::vector<unsigned> e(m.exponents().begin(), m.exponents().end());
    e.insert(e.begin() + static_cast<long>(y), 0u);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

// Brown's dense evaluation/interpolation scheme in the variable y: gcds of
// the images at y = alpha are scaled to a common leading coefficient,
// interpolated, and accepted after exact trial division. Images whose
// leading monomial is too large are unlucky and skipped.
Polynomial interpolation_gcd(const Polynomial &a, const Polynomial &b, std::size_t y) {
  const std::size_t n = a.arity();
  YCoeffs ca = split_off(a, y);
  YCoeffs cb = split_off(b, y);
  const UPoly c = gcd(make_primitive_y(ca), make_primitive_y(cb));
  const Polynomial pa = join(ca, y, n);
  const Polynomial pb = join(cb, y, n);
  const Polynomial content = in_variable(c, y, n);
  const UPoly &la = ca.begin()->second;
  const UPoly &lb = cb.begin()->second;
  const UPoly gamma = gcd(la, lb);
  const int bound = static_cast<int>(std::min(pa.degree_in(y), pb.degree_in(y))) + gamma.degree();

  std::optional<Polynomial> acc;
  Monomial lead;
  UPoly nodes = UPoly::constant(1);
  int points = 0;
  for (long t = 1; t < 100000; ++t) {
    const Rational alpha(t % 2 ? (t + 1) / 2 : -(t / 2));
    if (la(alpha) == 0 || lb(alpha) == 0)
      continue;
    Polynomial g = gcd(eval_drop(pa, y, alpha), eval_drop(pb, y, alpha));
    if (g.is_constant())
      return primitive_normalized(content);
    g *= Rational(gamma(alpha) / g.leading_coefficient());
    const UPoly node({-alpha, Rational(1)});
    if (acc) {
      const int cmp = grevlex_compare(g.leading_monomial(), lead);
      if (cmp > 0)
        continue;
      if (cmp < 0)
        acc.reset();
    }
    if (!acc) {
      acc = lift(g, y);
      lead = g.leading_monomial();
      nodes = node;
      points = 1;
      continue;
    }
    const Polynomial diff = g - eval_drop(*acc, y, alpha);
    if (!diff.is_zero())
      *acc += lift(diff, y) * in_variable(nodes, y, n) * Rational(1 / nodes(alpha));
    nodes = nodes * node;
    ++points;
    if (diff.is_zero() || points > bound + 1) {
      YCoeffs h = split_off(*acc, y);
      make_primitive_y(h);
      const Polynomial candidate = join(h, y, n);
      if (divides(candidate, pa) && divides(candidate, pb))
        return primitive_normalized(content * candidate);
    }
  }
  throw std::logic_error("gcd: interpolation did not converge");
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  require_same_arity(a, b);
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero())
    return primitive_normalized(b);
  if (b.is_zero())
    return primitive_normalized(a);
  const std::size_t n = a.arity();
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(n, 1);
  if (n == 1)
    return primitive_normalized(
        in_variable(gcd(UPoly::from_polynomial(a), UPoly::from_polynomial(b)), 0, 1));
  if (a.is_monomial())
    return monomial_gcd(a, b);
  if (b.is_monomial())
    return monomial_gcd(b, a);

  // A variable present in only one operand can be removed by taking content.
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.depends_on(v);
    const bool in_b = b.depends_on(v);
    if (in_a && !in_b)
      return gcd(content_in(a, v), b);
    if (in_b && !in_a)
      return gcd(a, content_in(b, v));
  }

  if (certified_coprime(a, b))
    return Polynomial::constant(n, 1);

  // Evaluate the variable of lowest degree: fewest interpolation points.
  std::size_t y = n;
  unsigned best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.depends_on(v))
      continue;
    const unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (y == n || d < best) {
      y = v;
      best = d;
    }
  }
  return interpolation_gcd(a, b, y);
}

std::vector<Polynomial> normalize_projective(std::vector<Polynomial> v) {
  bool any = false;
  Polynomial g;
  for (const auto &p : v) {
    if (p.is_zero())
      continue;
    if (!any) {
      g = primitive_normalized(p);
      any = true;
    } else if (!g.is_constant()) {
      g = gcd(g, p);
    }
  }
  if (!any)
    return v;
  if (!g.is_constant())
    for (auto &p : v)
      if (!p.is_zero())
        p = divide_or_throw(p, g);

  Integer l = 1, num_gcd = 0;
  for (const auto &p : v)
    for (const auto &[m, c] : p.terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
  Rational scale(l, num_gcd);
  scale.canonicalize();
  for (const auto &p : v)
    if (!p.is_zero()) {
      if (p.leading_coefficient() < 0)
        scale = -scale;
      break;
    }
  for (auto &p : v)
    p *= scale;
  return v;
}

} // namespace affib
