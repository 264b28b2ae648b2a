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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace affib {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings of different arity.
class ArityMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed user-supplied input (expressions, curves, pieces, ids).
class InputError : public Error {
public:
  using Error::Error;
};

inline std::string to_string(const Rational &q) { return q.get_str(); }

inline int sign(const Rational &q) { return sgn(q); }

/// Parses "p" or "p/q" with an optional leading '-'.
Rational parse_rational(std::string_view text);

} // namespace affib
