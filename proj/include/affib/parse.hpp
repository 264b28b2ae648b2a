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

#include <string>
#include <string_view>
#include <vector>

namespace affib {

/// Input text that does not match the expression grammar. `offset` is the
/// byte position where parsing stopped.
class ParseError : public InputError {
public:
  ParseError(const std::string &what, std::size_t offset);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

using VariableNames = std::vector<std::string>;

/// Parses a polynomial over the declared variables. Grammar:
///
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" uint)?
///   base   := rational | ident | "(" expr ")" | "-" base
///
/// Exponents above 64 are rejected. A leading minus applies after the
/// power, so "-x^2" is -(x^2).
Polynomial parse_polynomial(std::string_view text, const VariableNames &vars);

/// Inverse of parse_polynomial for the same variable names.
std::string to_string(const Polynomial &p, const VariableNames &vars);

/// "a,b,c" -> {"a","b","c"}; validates identifiers and uniqueness.
VariableNames parse_variable_names(std::string_view text);

/// x1, ..., xn
VariableNames default_variable_names(std::size_t n);

/// "expr;expr;..." -> components.
std::vector<Polynomial> parse_map(std::string_view text, const VariableNames &vars);

/// "(1,0,0,0)+t*(0,1,1,0)+t^2*(...)" -> coefficient vectors a_0, a_1, ...
std::vector<std::vector<Rational>> parse_curve(std::string_view text, std::size_t n);

/// "x2=0,x3=0;y=0,z=v*t" -> for each piece, its equations as lhs - rhs.
/// An equation without "=" means expr = 0.
std::vector<std::vector<Polynomial>> parse_piece_equations(std::string_view text,
                                                           const VariableNames &vars);

} // namespace affib
