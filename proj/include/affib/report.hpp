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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affib {

enum class CheckStatus { Pass, Fail, Skip, HeuristicPass };

std::string to_string(CheckStatus s);
/// Throws InputError on an unknown status name.
CheckStatus parse_check_status(std::string_view s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string details;

  bool operator==(const CheckResult &) const = default;
};

struct FibrationReport {
  std::string input;
  std::size_t n = 0;
  std::size_t k = 0;
  bool a1_ok = false;
  bool a2_ok = false;
  /// Each vector printed as "[p1, p2, ...]".
  std::vector<std::string> kernel_basis;
  /// Tuple key ("0,2") to printed coordinate, in tuple order.
  std::vector<std::pair<std::string, std::string>> reduced_pluecker;
  std::vector<std::string> singular_generators;
  std::vector<CheckResult> checks;

  bool any_failed() const;
  void add(std::string name, CheckStatus status, std::string details = {});
  bool operator==(const FibrationReport &) const = default;
};

/// Fills the analysis fields; checks are left empty.
FibrationReport make_report(const FibrationAnalysis &analysis, const VariableNames &vars,
                            std::string input);

std::string format_vector(const std::vector<Polynomial> &v, const VariableNames &vars);

std::string to_json(const FibrationReport &r, int indent = 2);
std::string to_json(const std::vector<FibrationReport> &rs, int indent = 2);
/// Throws InputError on malformed input.
FibrationReport report_from_json(std::string_view text);
std::string to_text(const FibrationReport &r);

} // namespace affib
