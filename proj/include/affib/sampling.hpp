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

#include "affib/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace affib {

/// Seeded source of random integer coordinates. Draws are reduced modulo
/// the range width so sequences match across standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % width);
  }

  std::vector<Rational> point(std::size_t n, long lo = -1000, long hi = 1000) {
    std::vector<Rational> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      p.emplace_back(integer(lo, hi));
    return p;
  }

  std::uint64_t next() { return rng_(); }

private:
  std::mt19937_64 rng_;
};

} // namespace affib
