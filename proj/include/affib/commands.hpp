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

#include <cstdint>
#include <optional>
#include <string>

namespace affib {

/// Flags shared by the command-line subcommands.
struct CommandOptions {
  std::optional<std::string> potential;
  std::optional<std::string> map;
  std::optional<std::string> catalog;
  std::optional<std::string> vars;
  std::optional<std::string> curve;
  std::optional<std::string> pieces;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct CommandOutput {
  int exit_code = kExitPass;
  /// JSON or human-readable text, newline-terminated.
  std::string output;
};

/// None of these throw; errors become exit codes with a message.
CommandOutput run_analyze(const CommandOptions &opts);
CommandOutput run_limit(const CommandOptions &opts);
CommandOutput run_conjecture(const CommandOptions &opts);
CommandOutput run_catalog_list(const CommandOptions &opts);

} // namespace affib
