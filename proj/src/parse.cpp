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

#include "affib/parse.hpp"

#include <cctype>
#include <set>

namespace affib {

ParseError::ParseError(const std::string &what, std::size_t offset)
    : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr unsigned kMaxExponent = 64;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_]))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
      fail("expected identifier");
    while (pos_ < text_.size() && is_ident_char(text_[pos_]))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned exponent() {
    const std::size_t start = (skip_space(), pos_);
    const std::string d = digits();
    if (d.size() > 3 || std::stoul(d) > kMaxExponent)
      throw ParseError("exponent overflow (maximum " + std::to_string(kMaxExponent) + ")",
                       start);
    return static_cast<unsigned>(std::stoul(d));
  }

  Rational unsigned_rational() {
    const std::size_t start = (skip_space(), pos_);
    Integer num(digits());
    Integer den = 1;
    if (accept('/'))
      den = Integer(digits());
    if (den == 0)
      throw ParseError("zero denominator", start);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const VariableNames &vars)
      : cur_(text), vars_(vars) {}

  Polynomial parse() {
    if (cur_.at_end())
      cur_.fail("empty expression");
    Polynomial p = expr();
    if (!cur_.at_end())
      cur_.fail("unexpected character");
    return p;
  }

private:
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (cur_.accept('+'))
        p += term();
      else if (cur_.accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (cur_.accept('*'))
      p = p * factor();
    return p;
  }

  Polynomial factor() {
    if (cur_.accept('-'))
      return -factor();
    Polynomial b = base();
    if (cur_.accept('^'))
      b = pow(b, cur_.exponent());
    return b;
  }

  Polynomial base() {
    const char c = cur_.peek();
    if (is_digit(c))
      return Polynomial::constant(vars_.size(), cur_.unsigned_rational());
    if (is_ident_start(c)) {
      const std::size_t start = cur_.pos();
      const std::string name = cur_.identifier();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
          return Polynomial::variable(vars_.size(), i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    if (cur_.accept('(')) {
      Polynomial p = expr();
      cur_.expect(')');
      return p;
    }
    if (c == '\0')
      cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected character '") + c + "'");
  }

  Cursor cur_;
  const VariableNames &vars_;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, at - start));
    start = at + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string monomial_string(const Monomial &m, const VariableNames &vars) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += vars[i];
    if (m[i] > 1)
      s += '^' + std::to_string(m[i]);
  }
  return s;
}


// Parses a sub-span of a larger input, reporting offsets in the larger input.
Polynomial parse_at(std::string_view text, const VariableNames &vars,
                    std::size_t base, const char *context) {
  try {
    return PolynomialParser(text, vars).parse();
  } catch (const ParseError &e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at offset"));
    throw ParseError(std::string(context) + ": " + msg, base + e.offset());
  }
}

} // namespace

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  const bool negative = cur.accept('-');
  Rational q = cur.unsigned_rational();
  if (!cur.at_end())
    cur.fail("unexpected character in rational");
  return negative ? Rational(-q) : q;
}

Polynomial parse_polynomial(std::string_view text, const VariableNames &vars) {
  return PolynomialParser(text, vars).parse();
}

std::string to_string(const Polynomial &p, const VariableNames &vars) {
  if (vars.size() != p.arity())
    throw ArityMismatch("to_string: " + std::to_string(vars.size()) +
                        " names for arity " + std::to_string(p.arity()));
  if (p.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    const std::string mono = monomial_string(m, vars);
    if (mono.empty())
      s += mag.get_str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.get_str() + "*" + mono;
  }
  return s;
}

VariableNames parse_variable_names(std::string_view text) {
  VariableNames names;
  std::set<std::string> seen;
  std::size_t offset = 0;
  for (std::string_view part : split(text, ',')) {
    std::string_view name = trim(part);
    const std::size_t at = offset + static_cast<std::size_t>(name.data() - part.data());
    if (name.empty() || !is_ident_start(name[0]))
      throw ParseError("invalid variable name '" + std::string(name) + "'", at);
    for (char c : name)
      if (!is_ident_char(c))
        throw ParseError("invalid variable name '" + std::string(name) + "'", at);
    if (!seen.insert(std::string(name)).second)
      throw ParseError("duplicate variable name '" + std::string(name) + "'", at);
    names.emplace_back(name);
    offset += part.size() + 1;
  }
  return names;
}

VariableNames default_variable_names(std::size_t n) {
  VariableNames v;
  for (std::size_t i = 1; i <= n; ++i)
    v.push_back("x" + std::to_string(i));
  return v;
}

std::vector<Polynomial> parse_map(std::string_view text, const VariableNames &vars) {
  std::vector<Polynomial> out;
  std::size_t offset = 0;
  for (std::string_view part : split(text, ';')) {
    out.push_back(parse_at(part, vars, offset, "map component"));
    offset += part.size() + 1;
  }
  return out;
}

std::vector<std::vector<Rational>> parse_curve(std::string_view text, std::size_t n) {
  Cursor cur(text);
  std::vector<std::vector<Rational>> coeffs;
  auto vector_literal = [&]() {
    cur.expect('(');
    std::vector<Rational> v;
    do {
      const bool negative = cur.accept('-');
      Rational q = cur.unsigned_rational();
      v.push_back(negative ? Rational(-q) : q);
    } while (cur.accept(','));
    cur.expect(')');
    if (v.size() != n)
      cur.fail("curve vector has " + std::to_string(v.size()) + " entries, expected " +
               std::to_string(n));
    return v;
  };
  bool first = true;
  while (first || !cur.at_end()) {
    Rational sign = 1;
    if (!first) {
      if (cur.accept('-'))
        sign = -1;
      else
        cur.expect('+');
    }
    first = false;
    unsigned power = 0;
    if (cur.peek() == 't') {
      const std::size_t at = cur.pos();
      if (cur.identifier() != "t")
        throw ParseError("expected curve parameter 't'", at);
      power = cur.accept('^') ? cur.exponent() : 1;
      cur.expect('*');
    }
    std::vector<Rational> v = vector_literal();
    if (coeffs.size() <= power)
      coeffs.resize(power + 1, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      coeffs[power][i] += sign * v[i];
  }
  return coeffs;
}

std::vector<std::vector<Polynomial>> parse_piece_equations(std::string_view text,
                                                           const VariableNames &vars) {
  std::vector<std::vector<Polynomial>> pieces;
  std::size_t offset = 0;
  for (std::string_view piece_text : split(text, ';')) {
    std::vector<Polynomial> equations;
    std::size_t eq_offset = offset;
    for (std::string_view eq : split(piece_text, ',')) {
      const std::size_t at = eq.find('=');
      if (at == std::string_view::npos) {
        equations.push_back(parse_at(eq, vars, eq_offset, "piece equation"));
      } else {
        Polynomial lhs = parse_at(eq.substr(0, at), vars, eq_offset, "piece equation");
        Polynomial rhs = parse_at(eq.substr(at + 1), vars, eq_offset + at + 1, "piece equation");
        equations.push_back(lhs - rhs);
      }
      eq_offset += eq.size() + 1;
    }
    pieces.push_back(std::move(equations));
    offset += piece_text.size() + 1;
  }
  return pieces;
}

} // namespace affib
