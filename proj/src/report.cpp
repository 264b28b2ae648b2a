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


#include "affib/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace affib {

using ojson = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::Skip:
    return "skip";
  case CheckStatus::HeuristicPass:
    return "heuristic-pass";
  }
  return "skip";
}

CheckStatus parse_check_status(std::string_view s) {
  for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skip,
                  CheckStatus::HeuristicPass})
    if (to_string(st) == s)
      return st;
  throw InputError("unknown check status '" + std::string(s) + "'");
}

bool FibrationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.status == CheckStatus::Fail; });
}

void FibrationReport::add(std::string name, CheckStatus status, std::string details) {
  checks.push_back({std::move(name), status, std::move(details)});
}

std::string format_vector(const std::vector<Polynomial> &v, const VariableNames &vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(v[i], vars);
  }
  return out + "]";
}

FibrationReport make_report(const FibrationAnalysis &analysis, const VariableNames &vars,
                            std::string input) {
  FibrationReport r;
  r.input = std::move(input);
  r.n = analysis.map.n();
  r.k = analysis.k;
  r.a1_ok = analysis.a1_ok;
  r.a2_ok = analysis.a2_ok;
  if (analysis.kernel)
    for (const auto &v : *analysis.kernel)
      r.kernel_basis.push_back(format_vector(v, vars));
  if (analysis.pluecker)
    for (std::size_t i = 0; i < analysis.pluecker->tuples.size(); ++i)
      r.reduced_pluecker.emplace_back(tuple_key(analysis.pluecker->tuples[i]),
                                      to_string(analysis.pluecker->coordinates[i], vars));
  for (const auto &g : analysis.singular_generators)
    r.singular_generators.push_back(to_string(g, vars));
  return r;
}

namespace {

ojson to_ojson(const FibrationReport &r) {
  ojson j;
  j["input"] = r.input;
  j["n"] = r.n;
  j["k"] = r.k;
  j["a1_ok"] = r.a1_ok;
  j["a2_ok"] = r.a2_ok;
  j["kernel_basis"] = r.kernel_basis;
  ojson pl = ojson::object();
  for (const auto &[key, value] : r.reduced_pluecker)
    pl[key] = value;
  j["reduced_pluecker"] = pl;
  j["singular_generators"] = r.singular_generators;
  ojson checks = ojson::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  j["checks"] = checks;
  return j;
}

} // namespace

std::string to_json(const FibrationReport &r, int indent) {
  return to_ojson(r).dump(indent);
}

std::string to_json(const std::vector<FibrationReport> &rs, int indent) {
  ojson arr = ojson::array();
  for (const auto &r : rs)
    arr.push_back(to_ojson(r));
  return arr.dump(indent);
}

FibrationReport report_from_json(std::string_view text) {
  try {
    const auto j = ojson::parse(text);
    FibrationReport r;
    r.input = j.at("input").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.a1_ok = j.at("a1_ok").get<bool>();
    r.a2_ok = j.at("a2_ok").get<bool>();
    r.kernel_basis = j.at("kernel_basis").get<std::vector<std::string>>();
    for (const auto &[key, value] : j.at("reduced_pluecker").items())
      r.reduced_pluecker.emplace_back(key, value.get<std::string>());
    r.singular_generators = j.at("singular_generators").get<std::vector<std::string>>();
    for (const auto &c : j.at("checks"))
      r.add(c.at("name").get<std::string>(),
            parse_check_status(c.at("status").get<std::string>()),
            c.at("details").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const FibrationReport &r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "n = " << r.n << ", k = " << r.k << ", A1 " << (r.a1_ok ? "holds" : "fails")
     << ", A2 " << (r.a2_ok ? "holds" : "fails") << "\n";
  if (!r.kernel_basis.empty()) {
    os << "kernel basis:\n";
    for (const auto &v : r.kernel_basis)
      os << "  " << v << "\n";
  }
  if (!r.reduced_pluecker.empty()) {
    os << "reduced Pluecker coordinates:\n";
    for (const auto &[key, value] : r.reduced_pluecker)
      os << "  <" << key << "> " << value << "\n";
  }
  if (!r.singular_generators.empty()) {
    os << "singular locus generators:\n";
    for (const auto &g : r.singular_generators)
      os << "  " << g << "\n";
  }
  if (!r.checks.empty()) {
    os << "checks:\n";
    for (const auto &c : r.checks) {
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (!c.details.empty())
        os << ": " << c.details;
      os << "\n";
    }
  }
  return os.str();
}

} // namespace affib
