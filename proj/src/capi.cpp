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


#include "affib/affib.h"

#include "affib/catalog.hpp"
#include "affib/commands.hpp"

#include <new>
#include <string>

struct affib_request {
  affib::CommandOptions options;
};

struct affib_result {
  int exit_code = 0;
  std::string output;
};

namespace {

thread_local std::string last_error;

affib_status fail(affib_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

affib_status set_string(affib_request *req, std::optional<std::string> affib::CommandOptions::*field,
                        const char *value) {
  if (!req)
    return fail(AFFIB_INPUT_ERROR, "null request");
  if (value)
    req->options.*field = std::string(value);
  else
    (req->options.*field).reset();
  return AFFIB_OK;
}

affib_status run(affib::CommandOutput (*command)(const affib::CommandOptions &),
                 const affib_request *req, affib_result **out) {
  if (!out)
    return fail(AFFIB_INPUT_ERROR, "null result pointer");
  *out = nullptr;
  if (!req)
    return fail(AFFIB_INPUT_ERROR, "null request");
  try {
    auto r = command(req->options);
    *out = new affib_result{r.exit_code, std::move(r.output)};
    last_error.clear();
    if (r.exit_code != 0)
      last_error = (*out)->output;
    switch (r.exit_code) {
    case affib::kExitPass:
      return AFFIB_OK;
    case affib::kExitCheckFailed:
      return AFFIB_CHECK_FAILED;
    default:
      return AFFIB_INPUT_ERROR;
    }
  } catch (const std::exception &e) {
    return fail(AFFIB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(AFFIB_INTERNAL_ERROR, "unknown error");
  }
}

} // namespace

extern "C" {

const char *affib_version(void) { return "0.1.0"; }

const char *affib_last_error(void) { return last_error.c_str(); }

affib_request *affib_request_new(void) { return new (std::nothrow) affib_request{}; }

void affib_request_free(affib_request *req) { delete req; }

affib_status affib_request_set_potential(affib_request *req, const char *expr) {
  return set_string(req, &affib::CommandOptions::potential, expr);
}

affib_status affib_request_set_map(affib_request *req, const char *exprs) {
  return set_string(req, &affib::CommandOptions::map, exprs);
}

affib_status affib_request_set_catalog(affib_request *req, const char *id) {
  return set_string(req, &affib::CommandOptions::catalog, id);
}

affib_status affib_request_set_vars(affib_request *req, const char *vars) {
  return set_string(req, &affib::CommandOptions::vars, vars);
}

affib_status affib_request_set_curve(affib_request *req, const char *curve) {
  return set_string(req, &affib::CommandOptions::curve, curve);
}

affib_status affib_request_set_pieces(affib_request *req, const char *pieces) {
  return set_string(req, &affib::CommandOptions::pieces, pieces);
}

affib_status affib_request_set_seed(affib_request *req, uint64_t seed) {
  if (!req)
    return fail(AFFIB_INPUT_ERROR, "null request");
  req->options.seed = seed;
  return AFFIB_OK;
}

affib_status affib_request_set_samples(affib_request *req, size_t samples) {
  if (!req)
    return fail(AFFIB_INPUT_ERROR, "null request");
  req->options.samples = samples;
  return AFFIB_OK;
}

affib_status affib_request_set_json(affib_request *req, int json) {
  if (!req)
    return fail(AFFIB_INPUT_ERROR, "null request");
  req->options.json = json != 0;
  return AFFIB_OK;
}

affib_status affib_analyze(const affib_request *req, affib_result **out) {
  return run(affib::run_analyze, req, out);
}

affib_status affib_limit(const affib_request *req, affib_result **out) {
  return run(affib::run_limit, req, out);
}

affib_status affib_conjecture(const affib_request *req, affib_result **out) {
  return run(affib::run_conjecture, req, out);
}

affib_status affib_catalog_list(const affib_request *req, affib_result **out) {
  return run(affib::run_catalog_list, req, out);
}

int affib_result_exit_code(const affib_result *res) { return res ? res->exit_code : -1; }

const char *affib_result_output(const affib_result *res) {
  return res ? res->output.c_str() : "";
}

void affib_result_free(affib_result *res) { delete res; }

size_t affib_catalog_size(void) { return affib::catalog().size(); }

const char *affib_catalog_id(size_t index) {
  const auto &c = affib::catalog();
  return index < c.size() ? c[index].id.c_str() : nullptr;
}

} // extern "C"
