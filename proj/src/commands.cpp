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


#include "affib/commands.hpp"

#include "affib/catalog.hpp"
#include "affib/conjecture.hpp"
#include "affib/report.hpp"

#include <json.hpp>

#include <future>
#include <sstream>

namespace affib {

namespace {

using ojson = nlohmann::ordered_json;

struct Subject {
  HoloMap map;
  VariableNames vars;
  std::string input;
  const CatalogEntry *entry = nullptr;
};

Subject resolve(const CommandOptions &o) {
  const int given = int(o.potential.has_value()) + int(o.map.has_value()) +
                    int(o.catalog.has_value());
  if (given != 1)
    throw InputError("exactly one of --potential, --map, --catalog is required");
  if (o.catalog) {
    if (o.vars)
      throw InputError("--vars cannot be combined with --catalog");
    if (*o.catalog == "all")
      throw InputError("--catalog all is only supported by analyze");
    const CatalogEntry &e = find_entry(*o.catalog);
    return {e.map(), e.vars, e.description(), &e};
  }
  if (!o.vars)
    throw InputError("--vars is required with --potential and --map");
  VariableNames vars = parse_variable_names(*o.vars);
  if (o.potential) {
    Polynomial psi = parse_polynomial(*o.potential, vars);
    if (vars.size() < 2)
      throw InputError("a potential needs at least two variables");
    return {HoloMap::from_potential(std::move(psi)), vars,
            "potential " + *o.potential + " in (" + *o.vars + ")"};
  }
  auto components = parse_map(*o.map, vars);
  if (components.size() != vars.size())
    throw InputError("--map needs " + std::to_string(vars.size()) + " components, got " +
                     std::to_string(components.size()));
  return {HoloMap::from_components(std::move(components)), vars,
          "map " + *o.map + " in (" + *o.vars + ")"};
}

std::vector<Piece> resolve_pieces(const CommandOptions &o, const Subject &s) {
  if (!o.pieces)
    return s.entry ? s.entry->pieces() : std::vector<Piece>{};
  std::vector<Piece> out;
  const auto sets = parse_piece_equations(*o.pieces, s.vars);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto p = Piece::try_from_equations(sets[i], s.vars.size());
    if (!p)
      throw InputError("piece " + std::to_string(i) + " is empty");
    out.push_back(std::move(*p));
  }
  return out;
}

std::string describe(const Piece &p, const VariableNames &vars) {
  std::string s;
  for (const auto &e : p.equations())
    s += (s.empty() ? "" : ", ") + to_string(e, vars) + " = 0";
  return "{" + s + "}";
}

std::vector<std::string> print_point(const std::vector<Rational> &p) {
  std::vector<std::string> out;
  for (const auto &x : p)
    out.push_back(to_string(x));
  return out;
}

std::string join(const std::vector<std::string> &xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + xs[i];
  return s + ")";
}

std::string dump(const ojson &j) { return j.dump(2) + "\n"; }

CommandOutput report_output(const FibrationReport &r, bool json) {
  return {r.any_failed() ? kExitCheckFailed : kExitPass, json ? to_json(r) + "\n" : to_text(r)};
}

CommandOutput failure(const std::string &message, int code, bool json) {
  if (json)
    return {code, dump(ojson{{"error", message}})};
  return {code, "error: " + message + "\n"};
}

template <class F> CommandOutput guarded(const CommandOptions &o, F f) {
  try {
    return f();
  } catch (const InputError &e) {
    return failure(e.what(), kExitInputError, o.json);
  } catch (const ArityMismatch &e) {
    return failure(e.what(), kExitInputError, o.json);
  } catch (const std::invalid_argument &e) {
    return failure(e.what(), kExitInputError, o.json);
  } catch (const std::exception &e) {
    return failure(e.what(), kExitCheckFailed, o.json);
  }
}

FibrationReport analyze_adhoc(const Subject &s, const std::vector<Piece> &pieces,
                              const CommandOptions &o) {
  const FibrationAnalysis a = analyze(s.map);
  FibrationReport r = make_report(a, s.vars, s.input);
  const std::size_t n = s.vars.size();
  r.add("a1", a.a1_ok ? CheckStatus::Pass : CheckStatus::Fail,
        "k = " + std::to_string(a.k) + ", n = " + std::to_string(n));
  if (a.map.gradient_source())
    r.add("hessian_symmetric", is_symmetric(a.jacobian) ? CheckStatus::Pass : CheckStatus::Fail);
  if (!a.kernel) {
    r.add("a2", CheckStatus::Skip, "requires A1");
    return r;
  }
  bool identity = true;
  for (const auto &v : *a.kernel)
    for (const auto &x : affib::apply(a.jacobian, v))
      identity = identity && x.is_zero();
  r.add("kernel_identity", identity ? CheckStatus::Pass : CheckStatus::Fail,
        "Jacobian times each basis vector");
  auto with_t = s.vars;
  with_t.push_back("t_");
  r.add("a2", a.a2_ok ? CheckStatus::Pass : CheckStatus::Fail,
        a.a2_witness ? "defect " + to_string(*a.a2_witness, with_t)
                     : "defect vanishes identically");

  const auto &gens = a.singular_generators;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string prefix = "piece[" + std::to_string(i) + "].";
    r.add(prefix + "contained",
          contains_affine_set(gens, pieces[i]) ? CheckStatus::Pass : CheckStatus::Fail,
          describe(pieces[i], s.vars));
    r.add(prefix + "dimension_bounds",
          check_theorem1_bounds(n, a.k, pieces[i].dimension()) ? CheckStatus::Pass
                                                                : CheckStatus::Fail,
          "dimension " + std::to_string(pieces[i].dimension()));
  }
  if (!pieces.empty()) {
    const auto v = verify_union_of_affine(gens, pieces, o.samples, o.seed);
    r.add("union_of_affine",
          v.kind == VerdictKind::Consistent ? CheckStatus::HeuristicPass : CheckStatus::Fail,
          v.details());
  } else if (generators_have_no_common_zero(gens, n)) {
    r.add("singular_locus_empty", CheckStatus::Pass, "generators have no common zero");
  } else {
    r.add("singular_locus", CheckStatus::Skip, "no pieces supplied");
  }
  if (n <= 3 || a.k <= 2)
    r.add("corollary_empty_singular_set",
          check_corollary(n, a.k, gens) ? CheckStatus::Pass : CheckStatus::Fail,
          "n <= 3 or k <= 2 forces an empty singular set");
  return r;
}

CommandOutput analyze_all(const CommandOptions &o) {
  if (o.vars)
    throw InputError("--vars cannot be combined with --catalog");
  const RunOptions ro{o.seed, o.samples};
  std::vector<std::future<FibrationReport>> jobs;
  for (const auto &e : catalog())
    jobs.push_back(std::async(std::launch::async, [&e, ro] { return run_entry(e, ro); }));
  std::vector<FibrationReport> reports;
  for (auto &j : jobs)
    reports.push_back(j.get());
  bool failed = false;
  std::string text;
  for (const auto &r : reports) {
    failed = failed || r.any_failed();
    text += (text.empty() ? "" : "\n") + to_text(r);
  }
  return {failed ? kExitCheckFailed : kExitPass, o.json ? to_json(reports) + "\n" : text};
}

} // namespace

CommandOutput run_analyze(const CommandOptions &o) {
  return guarded(o, [&]() -> CommandOutput {
    if (o.catalog && *o.catalog == "all" && !o.potential && !o.map)
      return analyze_all(o);
    const Subject s = resolve(o);
    if (s.entry && !o.pieces)
      return report_output(run_entry(*s.entry, {o.seed, o.samples}), o.json);
    return report_output(analyze_adhoc(s, resolve_pieces(o, s), o), o.json);
  });
}

CommandOutput run_limit(const CommandOptions &o) {
  return guarded(o, [&]() -> CommandOutput {
    const Subject s = resolve(o);
    if (!o.curve)
      throw InputError("--curve is required");
    const CurveSpec curve(parse_curve(*o.curve, s.vars.size()));
    const auto pieces = resolve_pieces(o, s);
    const FibrationAnalysis a = analyze(s.map);
    if (!a.a1_ok)
      return failure("A1 fails (k = " + std::to_string(a.k) + "), so there is no kernel map",
                     kExitCheckFailed, o.json);
    GrassmannPoint g;
    try {
      g = limit_along_curve(a, curve);
    } catch (const CurveInsideIndeterminacy &e) {
      return failure(e.what(), kExitCheckFailed, o.json);
    }

    const auto &p = curve.limit_point();
    ojson tangency = ojson::array();
    bool failed = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      CheckStatus st = CheckStatus::Skip;
      std::string details;
      const auto params = pieces[i].parameters_of(p);
      std::size_t on = 0;
      for (const auto &q : pieces)
        on += q.contains(p) ? 1 : 0;
      if (!params) {
        details = "limit point is not on the piece";
      } else if (on > 1) {
        details = "limit point lies on several pieces; regularity not certified";
      } else if (pieces[i].dimension() < g.subspace_dim) {
        st = CheckStatus::Fail;
        details = "piece is smaller than the limit subspace";
      } else {
        const bool ok = check_tangency(g, pieces[i].tangent_at(*params));
        st = ok ? CheckStatus::Pass : CheckStatus::Fail;
        details = ok ? "limit lies in the tangent space" : "limit leaves the tangent space";
      }
      failed = failed || st == CheckStatus::Fail;
      tangency.push_back({{"piece", describe(pieces[i], s.vars)},
                          {"status", to_string(st)},
                          {"details", details}});
    }

    ojson coords = ojson::object();
    for (std::size_t i = 0; i < g.tuples.size(); ++i)
      coords[tuple_key(g.tuples[i])] = to_string(g.coordinates[i]);
    ojson basis = ojson::array();
    for (const auto &row : basis_of(g))
      basis.push_back(print_point(row));

    const int code = failed ? kExitCheckFailed : kExitPass;
    if (o.json) {
      ojson j;
      j["input"] = s.input;
      j["n"] = a.map.n();
      j["k"] = a.k;
      j["curve"] = *o.curve;
      j["point"] = print_point(p);
      j["limit"] = {{"subspace_dim", g.subspace_dim}, {"pluecker", coords}, {"basis", basis}};
      j["tangency"] = tangency;
      return {code, dump(j)};
    }
    std::ostringstream os;
    os << "input: " << s.input << "\n";
    os << "limit at " << join(print_point(p)) << " along " << *o.curve << ":\n";
    os << "  span";
    for (const auto &row : basis)
      os << " " << join(row.get<std::vector<std::string>>());
    os << "\n  Pluecker";
    for (const auto &[key, value] : coords.items())
      os << " <" << key << ">=" << value.get<std::string>();
    os << "\n";
    for (const auto &t : tangency)
      os << "tangency [" << t["status"].get<std::string>() << "] "
         << t["piece"].get<std::string>() << ": " << t["details"].get<std::string>() << "\n";
    return {code, os.str()};
  });
}

CommandOutput run_conjecture(const CommandOptions &o) {
  return guarded(o, [&]() -> CommandOutput {
    const Subject s = resolve(o);
    const auto pieces = resolve_pieces(o, s);
    if (pieces.empty())
      throw InputError("--pieces is required");
    const FibrationAnalysis a = analyze(s.map);
    if (!a.a1_ok)
      return failure("A1 fails (k = " + std::to_string(a.k) + "), so there is no singular set",
                     kExitCheckFailed, o.json);
    const auto v = verify_union_of_affine(a.singular_generators, pieces, o.samples, o.seed);
    const bool ok = v.kind == VerdictKind::Consistent;
    const int code = ok ? kExitPass : kExitCheckFailed;
    const std::string status = to_string(ok ? CheckStatus::HeuristicPass : CheckStatus::Fail);
    if (o.json) {
      ojson j;
      j["input"] = s.input;
      j["n"] = a.map.n();
      j["k"] = a.k;
      std::vector<std::string> gens;
      for (const auto &g : a.singular_generators)
        gens.push_back(to_string(g, s.vars));
      j["singular_generators"] = gens;
      ojson ps = ojson::array();
      for (const auto &p : pieces)
        ps.push_back({{"piece", describe(p, s.vars)}, {"dimension", p.dimension()}});
      j["pieces"] = ps;
      j["verdict"] = to_string(v.kind);
      j["status"] = status;
      if (v.kind == VerdictKind::PieceNotContained)
        j["piece_index"] = v.piece_index;
      if (v.kind == VerdictKind::UncoveredZeroFound)
        j["point"] = print_point(v.point);
      j["details"] = v.details();
      return {code, dump(j)};
    }
    std::ostringstream os;
    os << "input: " << s.input << "\n";
    for (const auto &p : pieces)
      os << "piece " << describe(p, s.vars) << " of dimension " << p.dimension() << "\n";
    os << "verdict: " << to_string(v.kind) << " [" << status << "]\n";
    if (v.kind == VerdictKind::PieceNotContained)
      os << "  piece " << v.piece_index << " is not contained in the zero set\n";
    if (v.kind == VerdictKind::UncoveredZeroFound)
      os << "  common zero " << join(print_point(v.point)) << " lies on no piece\n";
    os << "  " << v.details() << "\n";
    return {code, os.str()};
  });
}

CommandOutput run_catalog_list(const CommandOptions &o) {
  return guarded(o, [&]() -> CommandOutput {
    if (o.json)
      return {kExitPass, catalog_to_json() + "\n"};
    std::ostringstream os;
    for (const auto &e : catalog())
      os << e.id << "\tn=" << e.n() << "\tk=" << e.expected_k << "\t" << e.notes << "\n";
    return {kExitPass, os.str()};
  });
}

} // namespace affib
