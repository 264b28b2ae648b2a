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

#include "affib/rational_function.hpp"

#include <stdexcept>

namespace affib {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.arity(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.arity() != den_.arity())
    throw ArityMismatch("rational function numerator/denominator arity mismatch");
  if (den_.is_zero())
    throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(std::size_t arity, const Rational &c) {
  return RationalFunction(Polynomial::constant(arity, c));
}

RationalFunction RationalFunction::variable(std::size_t arity, std::size_t index) {
  return RationalFunction(Polynomial::variable(arity, index));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.arity(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_or_throw(num_, g);
      den_ = divide_or_throw(den_, g);
    }
  }
  const Rational l = den_.leading_coefficient();
  if (l != 1) {
    const Rational inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
  if (a.den_ == b.den_)
    return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
  if (b.is_zero())
    throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction substitute(const Polynomial &p, std::span<const RationalFunction> args) {
  if (args.size() != p.arity())
    throw ArityMismatch("substitute: expected " + std::to_string(p.arity()) +
                        " arguments, got " + std::to_string(args.size()));
  const std::size_t out = args.empty() ? 0 : args[0].arity();
  for (const auto &a : args)
    if (a.arity() != out)
      throw ArityMismatch("substitute: arguments differ in arity");
  RationalFunction result = RationalFunction::constant(out, 0);
  for (const auto &[m, c] : p.terms()) {
    RationalFunction t = RationalFunction::constant(out, c);
    for (std::size_t i = 0; i < m.arity(); ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t = t * args[i];
    result = result + t;
  }
  return result;
}

Polynomial lcm(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return Polynomial(a.arity());
  return primitive_normalized(divide_or_throw(a * b, gcd(a, b)));
}

std::vector<Polynomial> clear_denominators(std::span<const RationalFunction> v) {
  if (v.empty())
    return {};
  const std::size_t arity = v.front().arity();
  Polynomial common = Polynomial::constant(arity, 1);
  for (const auto &x : v)
    if (!x.is_zero())
      common = lcm(common, x.den());
  std::vector<Polynomial> w;
  w.reserve(v.size());
  for (const auto &x : v)
    w.push_back(x.is_zero() ? Polynomial(arity) : x.num() * divide_or_throw(common, x.den()));
  return normalize_projective(std::move(w));
}

} // namespace affib
