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


// Command-line front end. Talks to the library only through affib.h.

#include "affib/affib.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct Flags {
  std::optional<std::string> potential, map, catalog, vars, curve, pieces;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

using Request = std::unique_ptr<affib_request, decltype(&affib_request_free)>;

Request to_request(const Flags &f) {
  Request req(affib_request_new(), &affib_request_free);
  if (!req)
    return req;
  auto c = [](const std::optional<std::string> &s) { return s ? s->c_str() : nullptr; };
  affib_request_set_potential(req.get(), c(f.potential));
  affib_request_set_map(req.get(), c(f.map));
  affib_request_set_catalog(req.get(), c(f.catalog));
  affib_request_set_vars(req.get(), c(f.vars));
  affib_request_set_curve(req.get(), c(f.curve));
  affib_request_set_pieces(req.get(), c(f.pieces));
  affib_request_set_seed(req.get(), f.seed);
  affib_request_set_samples(req.get(), f.samples);
  affib_request_set_json(req.get(), f.json ? 1 : 0);
  return req;
}

int dispatch(affib_status (*command)(const affib_request *, affib_result **), const Flags &f) {
  Request req = to_request(f);
  if (!req) {
    std::fputs("error: out of memory\n", stderr);
    return 3;
  }
  affib_result *res = nullptr;
  command(req.get(), &res);
  if (!res) {
    std::fprintf(stderr, "error: %s\n", affib_last_error());
    return 3;
  }
  const int code = affib_result_exit_code(res);
  std::fputs(affib_result_output(res), code == 2 ? stderr : stdout);
  affib_result_free(res);
  return code;
}

void subject_flags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--potential", f.potential, "potential psi; analyses its gradient");
  cmd->add_option("--map", f.map, "map components separated by ';'");
  cmd->add_option("--catalog", f.catalog, "catalog entry id");
  cmd->add_option("--vars", f.vars, "comma-separated variable names, in coordinate order");
  cmd->add_flag("--json", f.json, "emit JSON");
  cmd->add_option("--seed", f.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--samples", f.samples, "number of sampled lines")->capture_default_str();
  cmd->add_option("--pieces", f.pieces, "pieces as 'eq,eq;eq,eq'");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Affine fibrations of polynomial maps: kernel fibrations, singular sets, "
               "and checks on bundled examples."};
  app.set_version_flag("--version", std::string(affib_version()));
  app.require_subcommand(1);

  Flags f;
  auto *analyze = app.add_subcommand("analyze", "full analysis report");
  subject_flags(analyze, f);
  analyze->footer("--catalog all runs every bundled entry.");
  auto *limit = app.add_subcommand("limit", "limit of the kernel map along a curve");
  subject_flags(limit, f);
  limit->add_option("--curve", f.curve, "curve '(p)+t*(v)[+t^2*(w)...]'")->required();
  auto *conjecture = app.add_subcommand("conjecture", "check the singular set is a union of pieces");
  subject_flags(conjecture, f);
  auto *list = app.add_subcommand("catalog", "list bundled entries");
  list->add_flag("--json", f.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed())
      return dispatch(affib_analyze, f);
    if (limit->parsed())
      return dispatch(affib_limit, f);
    if (conjecture->parsed())
      return dispatch(affib_conjecture, f);
    return dispatch(affib_catalog_list, f);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
