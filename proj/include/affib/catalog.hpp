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

#include "affib/fibration.hpp"
#include "affib/parse.hpp"
#include "affib/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affib {

struct ExpectedPiece {
  /// Zero set of these equations, in graph form (see Piece).
  std::vector<Polynomial> equations;
  std::size_t dimension = 0;

  bool operator==(const ExpectedPiece &) const = default;
};

/// Generic Jacobian rank on the set cut out by linear equations.
struct ExpectedStratumRank {
  std::vector<Polynomial> equations;
  std::size_t rank = 0;

  bool operator==(const ExpectedStratumRank &) const = default;
};

struct CatalogEntry {
  std::string id;
  VariableNames vars;
  /// Either a potential or explicit components.
  std::optional<Polynomial> potential;
  std::vector<Polynomial> components;
  std::size_t expected_k = 0;
  /// Denominator-cleared, content-cleared, sign-normalized.
  KernelBasis expected_kernel;
  std::vector<ExpectedPiece> expected_singular_pieces;
  std::vector<ExpectedStratumRank> expected_stratum_ranks;
  /// Dimension of the intersection of the first two pieces.
  std::optional<std::size_t> expected_intersection_dim;
  bool expected_a2 = true;
  std::string notes;

  std::size_t n() const { return vars.size(); }
  HoloMap map() const;
  std::vector<Piece> pieces() const;
  std::string description() const;

  bool operator==(const CatalogEntry &) const = default;
};

class UnknownEntry : public InputError {
public:
  using InputError::InputError;
};

/// The bundled entries, built once; safe to read concurrently.
const std::vector<CatalogEntry> &catalog();
std::vector<std::string> list_entries();
/// Throws UnknownEntry.
const CatalogEntry &find_entry(std::string_view id);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

/// Full pipeline plus conjecture checks, each expectation marked pass or fail.
FibrationReport run_entry(const CatalogEntry &entry, const RunOptions &opts = {});
FibrationReport run_entry(std::string_view id, const RunOptions &opts = {});

std::string to_json(const CatalogEntry &e, int indent = 2);
std::string catalog_to_json(int indent = 2);
/// Throw InputError on malformed input.
CatalogEntry entry_from_json(std::string_view text);
std::vector<CatalogEntry> catalog_from_json(std::string_view text);

} // namespace affib
