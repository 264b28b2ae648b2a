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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affib/affib.h"
#include "affib/catalog.hpp"
#include "affib/commands.hpp"
#include "affib/parse.hpp"
#include "affib/report.hpp"
#include "support/generators.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <memory>
#include <sys/wait.h>

using namespace affib;
using namespace affib::testing;
using nlohmann::json;

namespace {

const VariableNames kX = parse_variable_names("x1,x2,x3,x4");

Polynomial P(std::string_view s, const VariableNames &v = kX) { return parse_polynomial(s, v); }

std::size_t error_offset(std::string_view text, const VariableNames &v = kX) {
  try {
    parse_polynomial(text, v);
  } catch (const ParseError &e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

CommandOptions potential(std::string p, std::string vars) {
  CommandOptions o;
  o.potential = std::move(p);
  o.vars = std::move(vars);
  return o;
}

CommandOptions entry(std::string id) {
  CommandOptions o;
  o.catalog = std::move(id);
  return o;
}

struct Run {
  int code;
  std::string out;
};

Run run_binary(const std::string &args) {
  const std::string cmd = std::string(AFFIB_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get()))
    out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct ResultDeleter {
  void operator()(affib_result *r) const { affib_result_free(r); }
};
using ResultPtr = std::unique_ptr<affib_result, ResultDeleter>;

} // namespace

TEST_CASE("parser accepts the documented forms") {
  const auto psi = P("x1*x2^2 + (x3 - x2*x4)^2");
  const auto x = [](std::size_t i) { return Polynomial::variable(4, i); };
  const auto expected = x(0) * x(1) * x(1) + (x(2) - x(1) * x(3)) * (x(2) - x(1) * x(3));
  CHECK(psi == expected);
  CHECK(P("0").is_zero());
  const VariableNames xv{"x"};
  const auto p = P("3/2*x^2", xv);
  CHECK(p == Polynomial::variable(1, 0) * Polynomial::variable(1, 0) * Rational(3, 2));
  CHECK(P("-x1^2") == -(x(0) * x(0)));
  CHECK(P("(-x1)^2") == x(0) * x(0));
  CHECK(P("--x1") == x(0));
  CHECK(P("  x1 *\tx2 ") == x(0) * x(1));
  CHECK(P("6/4") == Polynomial::constant(4, Rational(3, 2)));
  CHECK(P("x1^0") == Polynomial::constant(4, 1));
  CHECK(P("x1^64").total_degree() == 64);
  const VariableNames named{"alpha", "b_2", "C"};
  CHECK(P("alpha*b_2 - C", named).total_degree() == 2);
}

TEST_CASE("parser errors carry offsets") {
  CHECK(error_offset("x1 + * x2") == 5);
  CHECK(error_offset("x1 + ") == 5);
  CHECK(error_offset("(x1 + x2") == 8);
  CHECK(error_offset("x1)") == 2);
  CHECK(error_offset("2x1") == 1);
  CHECK(error_offset("x1 x2") == 3);
  CHECK(error_offset("x1^65") == 3);
  CHECK(error_offset("x1^") == 3);
  CHECK(error_offset("x1 + 1/0") == 5);
  CHECK(error_offset("x5 + 1") == 0);
  CHECK(error_offset("1 + \xce\xbe" "1") == 4);
  CHECK(error_offset("") == 0);
  CHECK_THROWS_AS(P("x1^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(P("x1 / x2"), InputError);
}

TEST_CASE("variable names") {
  CHECK(parse_variable_names("a, b ,c") == VariableNames{"a", "b", "c"});
  CHECK(default_variable_names(3) == VariableNames{"x1", "x2", "x3"});
  CHECK_THROWS_AS(parse_variable_names("x,x"), InputError);
  CHECK_THROWS_AS(parse_variable_names("1x"), InputError);
  CHECK_THROWS_AS(parse_variable_names(""), InputError);
  CHECK_THROWS_AS(parse_variable_names("x,,y"), InputError);
  CHECK_THROWS_AS(parse_variable_names("\xce\xbe" "1"), InputError);
}

TEST_CASE("printer and parser round-trip") {
  Gen g(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const auto vars = default_variable_names(n);
    const auto p = g.polynomial(n, 6, 4);
    const auto text = to_string(p, vars);
    REQUIRE_MESSAGE(parse_polynomial(text, vars) == p, text);
  }
  CHECK(to_string(Polynomial(2), default_variable_names(2)) == "0");
}

TEST_CASE("maps, curves and pieces") {
  const auto m = parse_map("x1; x2*x3 ;1/2", kX);
  REQUIRE(m.size() == 3);
  CHECK(m[2] == Polynomial::constant(4, Rational(1, 2)));
  CHECK_THROWS_AS(parse_map("x1;;x2", kX), InputError);

  const auto c = parse_curve("(1,0,0,0)+t*(0,1,1,0)", 4);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<Rational>{1, 0, 0, 0});
  CHECK(c[1] == std::vector<Rational>{0, 1, 1, 0});
  const auto c2 = parse_curve("(0,0)+t^2*(1,-1/2)", 2);
  REQUIRE(c2.size() == 3);
  CHECK(c2[1] == std::vector<Rational>{0, 0});
  CHECK(c2[2] == std::vector<Rational>{1, Rational(-1, 2)});
  CHECK_THROWS_AS(parse_curve("(1,0)+t*(0,1)", 3), InputError);
  CHECK_THROWS_AS(parse_curve("(1,0)+s*(0,1)", 2), InputError);
  CHECK_THROWS_AS(parse_curve("(1,0", 2), InputError);

  const VariableNames seven = parse_variable_names("x,y,z,v,w,s,t");
  const auto pieces = parse_piece_equations("y=0,z=v*t;v=0,z=y*w", seven);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].size() == 2);
  CHECK(pieces[0][1] == parse_polynomial("z - v*t", seven));
  CHECK(parse_piece_equations("y, z - t", seven) == parse_piece_equations("y=0,z=t", seven));
  CHECK_THROWS_AS(parse_piece_equations("y=", seven), InputError);
  CHECK_THROWS_AS(parse_piece_equations("y=0=1", seven), InputError);
}

TEST_CASE("report JSON round-trips") {
  for (const auto &e : catalog()) {
    const auto r = run_entry(e);
    const auto text = to_json(r);
    const auto back = report_from_json(text);
    CHECK_MESSAGE(back == r, e.id);
    CHECK(to_json(back) == text);
    const auto j = json::parse(text);
    for (const char *key : {"input", "n", "k", "a1_ok", "a2_ok", "kernel_basis", "reduced_pluecker",
                            "singular_generators", "checks"})
      CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK_THROWS_AS(report_from_json("{}"), InputError);
  CHECK_THROWS_AS(report_from_json("[1,2"), InputError);
  CHECK_THROWS_AS(parse_check_status("maybe"), InputError);
  for (auto s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skip, CheckStatus::HeuristicPass})
    CHECK(parse_check_status(to_string(s)) == s);
  CHECK(to_string(CheckStatus::HeuristicPass) == "heuristic-pass");
}

TEST_CASE("analyze") {
  auto o = potential("x1*x2^2+(x3-x2*x4)^2", "x1,x2,x3,x4");
  o.json = true;
  const auto r = run_analyze(o);
  CHECK(r.exit_code == kExitPass);
  const auto j = json::parse(r.output);
  CHECK(j["k"] == 3);
  CHECK(j["a1_ok"] == true);
  CHECK(j["a2_ok"] == true);
  CHECK(run_analyze(o).output == r.output);

  auto full = potential("x^2+y^2", "x,y");
  const auto bad = run_analyze(full);
  CHECK(bad.exit_code == kExitCheckFailed);
  full.json = true;
  CHECK(json::parse(run_analyze(full).output)["a1_ok"] == false);

  auto cat = entry("ex1");
  cat.json = true;
  const auto viacat = run_analyze(cat);
  CHECK(viacat.exit_code == kExitPass);
  CHECK(viacat.output == to_json(run_entry("ex1")) + "\n");

  auto all = entry("all");
  all.json = true;
  const auto every = run_analyze(all);
  CHECK(every.exit_code == kExitPass);
  const auto arr = json::parse(every.output);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == catalog().size());
  CHECK(run_analyze(all).output == every.output);

  CommandOptions map;
  map.map = "x2;x1";
  map.vars = "x1,x2";
  CHECK(run_analyze(map).exit_code == kExitCheckFailed);
  map.map = "x1+x2;x1+x2";
  CHECK(run_analyze(map).exit_code == kExitPass);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_analyze(potential("x^", "x")).exit_code == kExitInputError);
  CHECK(run_analyze(potential("x*y", "x")).exit_code == kExitInputError);
  CHECK(run_analyze(potential("x", "x,x")).exit_code == kExitInputError);
  CHECK(run_analyze(CommandOptions{}).exit_code == kExitInputError);
  CHECK(run_analyze(entry("missing")).exit_code == kExitInputError);
  auto both = potential("x", "x");
  both.catalog = "ex1";
  CHECK(run_analyze(both).exit_code == kExitInputError);
  auto catvars = entry("ex1");
  catvars.vars = "x1,x2,x3,x4";
  CHECK(run_analyze(catvars).exit_code == kExitInputError);
  CommandOptions novars;
  novars.potential = "x1";
  CHECK(run_analyze(novars).exit_code == kExitInputError);
  auto lim = entry("ex1");
  CHECK(run_limit(lim).exit_code == kExitInputError);
  lim.curve = "(1,0,0)+t*(0,1,1)";
  CHECK(run_limit(lim).exit_code == kExitInputError);
  auto js = potential("(", "x");
  js.json = true;
  const auto err = run_analyze(js);
  CHECK(err.exit_code == kExitInputError);
  CHECK(json::parse(err.output).contains("error"));
}

TEST_CASE("limit") {
  auto o = entry("ex1");
  o.json = true;
  o.curve = "(1,0,0,0)+t*(0,1,1,0)";
  auto r = run_limit(o);
  CHECK(r.exit_code == kExitPass);
  auto j = json::parse(r.output);
  CHECK(j["limit"]["basis"] == json::parse(R"([["1","0","0","1"]])"));
  CHECK(j["tangency"][0]["status"] == "pass");

  o.curve = "(1,0,0,0)+t*(0,1,0,0)";
  j = json::parse(run_limit(o).output);
  CHECK(j["limit"]["basis"] == json::parse(R"([["0","0","0","1"]])"));

  o.curve = "(0,0,0,0)+t*(1,0,0,0)";
  CHECK(run_limit(o).exit_code == kExitCheckFailed);

  auto c3 = entry("c3-trivial");
  c3.json = true;
  c3.curve = "(0,0,0)+t*(1,1,1)";
  j = json::parse(run_limit(c3).output);
  CHECK(j["limit"]["basis"] == json::parse(R"([["0","0","1"]])"));
}

TEST_CASE("conjecture") {
  auto o = entry("ex1");
  o.json = true;
  o.pieces = "x2=0,x3=0";
  auto r = run_conjecture(o);
  CHECK(r.exit_code == kExitPass);
  CHECK(json::parse(r.output)["verdict"] == "Consistent");

  o.pieces = "x1=0,x2=0,x3=0";
  r = run_conjecture(o);
  CHECK(r.exit_code == kExitCheckFailed);
  const auto j = json::parse(r.output);
  CHECK(j["verdict"] == "UncoveredZeroFound");
  CHECK(j["point"][1] == "0");
  CHECK(j["point"][2] == "0");
  CHECK(j["point"][0] != "0");

  o.pieces = "x1=0";
  CHECK(json::parse(run_conjecture(o).output)["verdict"] == "PieceNotContained");

  auto seven = entry("seven-var");
  seven.json = true;
  const auto s = json::parse(run_conjecture(seven).output);
  CHECK(s["verdict"] == "Consistent");
  CHECK(s["status"] == "heuristic-pass");
}

TEST_CASE("catalog listing") {
  CommandOptions o;
  const auto text = run_catalog_list(o);
  CHECK(text.exit_code == kExitPass);
  for (const auto &id : list_entries())
    CHECK(text.output.find(id) != std::string::npos);
  o.json = true;
  CHECK(catalog_from_json(run_catalog_list(o).output) == catalog());
}

TEST_CASE("malformed input never escapes as an exception") {
  Gen g(77);
  const std::string alphabet = "xy12+-*^()/ ;,=t0\xce";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int len = static_cast<int>(g.integer(0, 10));
    for (int c = 0; c < len; ++c)
      s += alphabet[static_cast<std::size_t>(g.integer(0, static_cast<long>(alphabet.size()) - 1))];
    try {
      parse_polynomial(s, {"x", "y", "t"});
    } catch (const InputError &) {
    }
    if (i % 10 != 0)
      continue;
    CommandOptions o = potential(s, "x,y");
    const auto a = run_analyze(o);
    CHECK_MESSAGE((a.exit_code >= 0 && a.exit_code <= 2), s);
    CommandOptions m;
    m.map = s;
    m.vars = "x,y";
    const auto b = run_analyze(m);
    CHECK_MESSAGE((b.exit_code >= 0 && b.exit_code <= 2), s);
    auto lim = entry("ex1");
    lim.curve = s;
    CHECK(run_limit(lim).exit_code == kExitInputError);
    auto conj = entry("ex1");
    conj.pieces = s;
    const auto c = run_conjecture(conj);
    CHECK_MESSAGE((c.exit_code >= 0 && c.exit_code <= 2), s);
  }
}

TEST_CASE("C API") {
  CHECK(std::string(affib_version()).size() > 0);
  CHECK(affib_catalog_size() == catalog().size());
  for (std::size_t i = 0; i < affib_catalog_size(); ++i)
    CHECK(std::string(affib_catalog_id(i)) == catalog()[i].id);
  CHECK(affib_catalog_id(affib_catalog_size()) == nullptr);

  CHECK(affib_result_exit_code(nullptr) == -1);
  CHECK(std::string(affib_result_output(nullptr)).empty());
  affib_result_free(nullptr);
  affib_request_free(nullptr);
  affib_result *raw = nullptr;
  CHECK(affib_analyze(nullptr, &raw) == AFFIB_INPUT_ERROR);
  CHECK(raw == nullptr);
  CHECK(std::string(affib_last_error()).size() > 0);
  CHECK(affib_request_set_potential(nullptr, "x") == AFFIB_INPUT_ERROR);

  affib_request *req = affib_request_new();
  REQUIRE(req);
  CHECK(affib_analyze(req, nullptr) == AFFIB_INPUT_ERROR);
  CHECK(affib_request_set_catalog(req, "ex1") == AFFIB_OK);
  CHECK(affib_request_set_json(req, 1) == AFFIB_OK);
  CHECK(affib_analyze(req, &raw) == AFFIB_OK);
  ResultPtr res(raw);
  CHECK(affib_result_exit_code(res.get()) == 0);
  CHECK(std::string(affib_result_output(res.get())) == to_json(run_entry("ex1")) + "\n");

  CHECK(affib_request_set_curve(req, "(1,0,0,0)+t*(0,1,0,0)") == AFFIB_OK);
  CHECK(affib_limit(req, &raw) == AFFIB_OK);
  res.reset(raw);
  CHECK(json::parse(affib_result_output(res.get()))["limit"]["basis"][0][3] == "1");

  CHECK(affib_request_set_pieces(req, "x1=0,x2=0,x3=0") == AFFIB_OK);
  CHECK(affib_conjecture(req, &raw) == AFFIB_CHECK_FAILED);
  res.reset(raw);
  CHECK(affib_result_exit_code(res.get()) == 1);

  CHECK(affib_request_set_catalog(req, nullptr) == AFFIB_OK);
  CHECK(affib_request_set_potential(req, "x^2+y^2") == AFFIB_OK);
  CHECK(affib_request_set_vars(req, "x,y") == AFFIB_OK);
  CHECK(affib_request_set_seed(req, 3) == AFFIB_OK);
  CHECK(affib_request_set_samples(req, 10) == AFFIB_OK);
  CHECK(affib_request_set_curve(req, nullptr) == AFFIB_OK);
  CHECK(affib_request_set_pieces(req, nullptr) == AFFIB_OK);
  CHECK(affib_analyze(req, &raw) == AFFIB_CHECK_FAILED);
  res.reset(raw);
  CHECK(affib_result_exit_code(res.get()) == 1);

  CHECK(affib_request_set_potential(req, "x^") == AFFIB_OK);
  CHECK(affib_analyze(req, &raw) == AFFIB_INPUT_ERROR);
  res.reset(raw);
  CHECK(affib_result_exit_code(res.get()) == 2);

  CHECK(affib_catalog_list(req, &raw) == AFFIB_OK);
  res.reset(raw);
  CHECK(json::parse(affib_result_output(res.get())).size() == catalog().size());
  affib_request_free(req);
}

TEST_CASE("command-line binary") {
  auto r = run_binary("analyze --potential 'x1*x2^2+(x3-x2*x4)^2' --vars x1,x2,x3,x4 --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["k"] == 3);

  r = run_binary("analyze --potential 'x^2+y^2' --vars x,y");
  CHECK(r.code == 1);

  r = run_binary("analyze --potential 'x^' --vars x");
  CHECK(r.code == 2);
  r = run_binary("analyze --bogus");
  CHECK(r.code == 2);
  r = run_binary("");
  CHECK(r.code == 2);
  r = run_binary("limit --catalog ex1");
  CHECK(r.code == 2);

  r = run_binary("analyze --catalog ex1 --json");
  CHECK(r.code == 0);
  CHECK(r.out == to_json(run_entry("ex1")) + "\n");

  r = run_binary("limit --catalog ex1 --curve '(1,0,0,0)+t*(0,1,1,0)' --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["limit"]["basis"][0] == json::parse(R"(["1","0","0","1"])"));

  r = run_binary("conjecture --catalog ex1 --pieces 'x2=0,x3=0' --seed 4 --samples 50 --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "Consistent");

  r = run_binary("catalog");
  CHECK(r.code == 0);
  CHECK(r.out.find("seven-var") != std::string::npos);

  r = run_binary("--help");
  CHECK(r.code == 0);
  r = run_binary("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find(affib_version()) != std::string::npos);
}
