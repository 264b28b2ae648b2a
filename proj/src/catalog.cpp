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


#include "affib/catalog.hpp"

#include "affib/conjecture.hpp"
#include "affib/rational_function.hpp"
#include "affib/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace affib {

namespace {

using RF = RationalFunction;

struct Builder {
  CatalogEntry e;

  Builder(std::string id, std::string_view vars) {
    e.id = std::move(id);
    e.vars = parse_variable_names(vars);
  }
  Polynomial p(std::string_view s) const { return parse_polynomial(s, e.vars); }
  RF rf(std::string_view s) const { return RF(p(s)); }
  std::vector<Polynomial> eqs(std::string_view s) const {
    return parse_piece_equations(s, e.vars).at(0);
  }
  Builder &potential(std::string_view s) {
    e.potential = p(s);
    return *this;
  }
  Builder &kernel(std::vector<RF> v) {
    e.expected_kernel.push_back(clear_denominators(v));
    return *this;
  }
  Builder &piece(std::string_view s, std::size_t dim) {
    e.expected_singular_pieces.push_back({eqs(s), dim});
    return *this;
  }
  Builder &stratum(std::string_view s, std::size_t rank) {
    e.expected_stratum_ranks.push_back({eqs(s), rank});
    return *this;
  }
};

RF zero(const Builder &b) { return RF::constant(b.e.n(), 0); }
RF one(const Builder &b) { return RF::constant(b.e.n(), 1); }

CatalogEntry ex1() {
  Builder b("ex1", "x1,x2,x3,x4");
  b.potential("x1*x2^2 + (x3 - x2*x4)^2");
  b.e.expected_k = 3;
  b.kernel({b.rf("x3") / b.rf("x2") - b.rf("x4"), zero(b), b.rf("x2"), one(b)});
  b.piece("x2=0,x3=0", 2);
  b.stratum("x2=0,x3=0", 2);
  b.stratum("x1=0,x2=0,x3=0", 1);
  b.e.notes = "rank 3 Hessian in 4 variables; line fibres; singular plane x2 = x3 = 0";
  return b.e;
}

CatalogEntry fam(unsigned k, unsigned m) {
  Builder b("fam-" + std::to_string(k) + "-" + std::to_string(m), "x1,x2,x3,x4");
  const Polynomial q = b.p("x3 - x2*x4");
  b.e.potential = b.p("x1") * pow(b.p("x2"), k) + pow(q, m);
  b.e.expected_k = 3;
  const Rational ratio = Rational(m) / k;
  b.kernel({RF::constant(4, ratio) * RF(pow(q, m - 1)) / RF(pow(b.p("x2"), k - 1)), zero(b),
            b.rf("x2"), one(b)});
  b.piece("x2=0,x3=0", 2);
  b.e.notes = "x1*x2^k + (x3 - x2*x4)^m with k = " + std::to_string(k) +
              ", m = " + std::to_string(m);
  return b.e;
}

CatalogEntry ndim(std::size_t n) {
  std::string vars;
  std::string sum;
  for (std::size_t i = 1; i + 3 <= n; ++i) {
    vars += "x" + std::to_string(i) + ",";
    sum += (i > 1 ? " + x" : "x") + std::to_string(i);
  }
  Builder b("ndim-" + std::to_string(n), vars + "y,z,w");
  b.potential("y^2*(" + sum + ") + (z - y*w)^2");
  b.e.expected_k = 3;
  // Moving mass between the x's, and the line along which z - y*w is fixed.
  for (std::size_t i = 0; i + 4 < n; ++i) {
    std::vector<RF> v(n, zero(b));
    v[i] = one(b);
    v[i + 1] = -one(b);
    b.kernel(v);
  }
  std::vector<RF> v(n, zero(b));
  v[0] = b.rf("z - y*w") / b.rf("y");
  v[n - 2] = b.rf("y");
  v[n - 1] = one(b);
  b.kernel(v);
  b.piece("y=0,z=0", n - 2);
  b.e.notes = "level sets of dimension n - 3; singular set of dimension n - 2";
  return b.e;
}

CatalogEntry seven_var() {
  Builder b("seven-var", "x,y,z,v,w,s,t");
  b.potential("x*y^2 + s*v^2 + (z - y*w - v*t)^2");
  b.e.expected_k = 5;
  const RF q = b.rf("z - y*w - v*t");
  b.kernel({q / b.rf("y"), zero(b), b.rf("y"), zero(b), one(b), zero(b), zero(b)});
  b.kernel({zero(b), zero(b), b.rf("v"), zero(b), zero(b), q / b.rf("v"), one(b)});
  b.piece("y=0,z=v*t", 5);
  b.piece("v=0,z=y*w", 5);
  b.e.expected_intersection_dim = 4;
  b.e.notes = "two singular families of dimension n - 2 meeting in dimension 4";
  return b.e;
}

CatalogEntry c3_trivial() {
  Builder b("c3-trivial", "x1,x2,x3");
  b.potential("x1*x2^2");
  b.e.expected_k = 2;
  b.kernel({zero(b), zero(b), one(b)});
  b.e.notes = "constant kernel direction; no singular set";
  return b.e;
}

CatalogEntry linear_rank2() {
  Builder b("linear-rank2", "x1,x2,x3,x4");
  b.potential("(x1 + x2)^2 + x3^2");
  b.e.expected_k = 2;
  b.kernel({one(b), -one(b), zero(b), zero(b)});
  b.kernel({zero(b), zero(b), zero(b), one(b)});
  b.e.notes = "linear gradient of rank 2; constant kernel";
  return b.e;
}

CatalogEntry curved_parabola() {
  Builder b("curved-parabola", "x1,x2");
  b.e.components = {b.p("x2 - x1^2"), b.p("0")};
  b.e.expected_k = 1;
  b.kernel({one(b), b.rf("2*x1")});
  b.e.expected_a2 = false;
  b.e.notes = "level sets are parabolas, so the kernel lines are only tangent to them";
  return b.e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(ex1());
  for (unsigned k : {2u, 3u})
    for (unsigned m : {2u, 3u})
      c.push_back(fam(k, m));
  c.push_back(ndim(5));
  c.push_back(ndim(6));
  c.push_back(seven_var());
  c.push_back(c3_trivial());
  c.push_back(linear_rank2());
  c.push_back(curved_parabola());
  return c;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string join_point(const std::vector<Rational> &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

std::string format_grassmann(const GrassmannPoint &g) {
  std::string s;
  for (const auto &row : basis_of(g))
    s += (s.empty() ? "" : " ") + join_point(row);
  return "span " + s;
}

/// Tangency and non-extendibility at one regular point of pieces[i].
void check_piece_limits(const FibrationAnalysis &a, const std::vector<Piece> &pieces,
                        std::size_t i, const RunOptions &opts, FibrationReport &r) {
  const Piece &piece = pieces[i];
  const std::string prefix = "piece[" + std::to_string(i) + "].";
  const std::size_t n = piece.ambient();
  Sampler rng(opts.seed * 0x9e3779b97f4a7c15ULL + i + 1);

  std::optional<std::vector<Rational>> params;
  std::vector<Rational> point;
  for (int attempt = 0; attempt < 100 && !params; ++attempt) {
    auto candidate = rng.point(piece.dimension(), -9, 9);
    point = piece.point_at(candidate);
    bool elsewhere = false;
    for (std::size_t j = 0; j < pieces.size(); ++j)
      elsewhere = elsewhere || (j != i && pieces[j].contains(point));
    if (!elsewhere && is_essential_singularity(a, point).kind == PointKind::Singular)
      params = std::move(candidate);
  }
  if (!params) {
    r.add(prefix + "tangency", CheckStatus::Fail, "no regular singular point found");
    return;
  }
  const AffineSubspace tangent = piece.tangent_at(*params);

  // Velocities: generic ones, and ones tangent to the level set of a single
  // generator through the point, which approach along the slower branches.
  std::vector<std::vector<std::vector<Rational>>> constrained;
  for (const auto &gen : a.singular_generators) {
    std::vector<Rational> grad;
    for (std::size_t v = 0; v < n; ++v)
      grad.push_back(evaluate(partial_derivative(gen, v), point));
    if (std::any_of(grad.begin(), grad.end(), [](const Rational &x) { return x != 0; }))
      constrained.push_back(rational_nullspace({grad}, n));
  }
  std::vector<GrassmannPoint> limits;
  bool tangent_ok = true;
  for (std::size_t attempt = 0; attempt < 300 && limits.size() < 10; ++attempt) {
    std::vector<Rational> velocity = rng.point(n, -9, 9);
    const std::size_t family = attempt % (constrained.size() + 1);
    if (family > 0) {
      velocity.assign(n, Rational(0));
      for (const auto &b : constrained[family - 1]) {
        const Rational c(rng.integer(-9, 9));
        for (std::size_t v = 0; v < n; ++v)
          velocity[v] += c * b[v];
      }
    }
    std::vector<std::vector<Rational>> coeffs{point, velocity};
    if (attempt % 2 == 1)
      coeffs.push_back(rng.point(n, -9, 9));
    try {
      const auto g = limit_along_curve(a, CurveSpec(coeffs));
      tangent_ok = tangent_ok && check_tangency(g, tangent);
      limits.push_back(g);
    } catch (const CurveInsideIndeterminacy &) {
    } catch (const std::invalid_argument &) {
    }
  }
  const std::string at = "at " + join_point(point);
  if (limits.size() < 5) {
    r.add(prefix + "tangency", CheckStatus::Fail, "fewer than 5 curves had a limit " + at);
    return;
  }
  r.add(prefix + "tangency", pass_if(tangent_ok),
        std::to_string(limits.size()) + " curve limits " + at +
            (tangent_ok ? " lie in the tangent space" : " leave the tangent space"));
  std::vector<GrassmannPoint> distinct;
  for (const auto &g : limits)
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end())
      distinct.push_back(g);
  std::string details = std::to_string(distinct.size()) + " distinct limits " + at;
  if (distinct.size() >= 2)
    details += ": " + format_grassmann(distinct[0]) + " vs " + format_grassmann(distinct[1]);
  r.add(prefix + "non_extendible", pass_if(distinct.size() >= 2), details);
}

} // namespace

HoloMap CatalogEntry::map() const {
  return potential ? HoloMap::from_potential(*potential) : HoloMap::from_components(components);
}

std::vector<Piece> CatalogEntry::pieces() const {
  std::vector<Piece> out;
  for (const auto &p : expected_singular_pieces)
    out.push_back(Piece::from_equations(p.equations, n()));
  return out;
}

std::string CatalogEntry::description() const {
  std::string vs;
  for (const auto &v : vars)
    vs += (vs.empty() ? "" : ",") + v;
  if (potential)
    return "catalog " + id + ": psi = " + to_string(*potential, vars) + " in (" + vs + ")";
  std::string cs;
  for (const auto &c : components)
    cs += (cs.empty() ? "" : "; ") + to_string(c, vars);
  return "catalog " + id + ": map = (" + cs + ") in (" + vs + ")";
}

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<std::string> list_entries() {
  std::vector<std::string> ids;
  for (const auto &e : catalog())
    ids.push_back(e.id);
  return ids;
}

const CatalogEntry &find_entry(std::string_view id) {
  for (const auto &e : catalog())
    if (e.id == id)
      return e;
  throw UnknownEntry("unknown catalog entry '" + std::string(id) + "'");
}

FibrationReport run_entry(std::string_view id, const RunOptions &opts) {
  return run_entry(find_entry(id), opts);
}

FibrationReport run_entry(const CatalogEntry &e, const RunOptions &opts) {
  const FibrationAnalysis a = analyze(e.map());
  FibrationReport r = make_report(a, e.vars, e.description());
  const std::size_t n = e.n();
  const std::string kn = "k = " + std::to_string(a.k) + ", n = " + std::to_string(n);

  r.add("a1", pass_if(a.a1_ok), kn);
  r.add("expected_k", pass_if(a.k == e.expected_k),
        "computed " + std::to_string(a.k) + ", expected " + std::to_string(e.expected_k));
  if (a.map.gradient_source())
    r.add("hessian_symmetric", pass_if(is_symmetric(a.jacobian)));
  if (!a.kernel) {
    r.add("expected_a2", pass_if(!e.expected_a2), "A1 fails, so A2 is not evaluated");
    return r;
  }

  bool identity = true;
  for (const auto &v : *a.kernel)
    for (const auto &x : affib::apply(a.jacobian, v))
      identity = identity && x.is_zero();
  r.add("kernel_identity", pass_if(identity), "Jacobian times each basis vector");

  if (*a.kernel == e.expected_kernel)
    r.add("expected_kernel", CheckStatus::Pass, "equal normalized basis");
  else if (e.expected_kernel.size() == a.kernel->size() && pluecker(e.expected_kernel) == *a.pluecker)
    r.add("expected_kernel", CheckStatus::Pass, "same span (equal reduced Pluecker vectors)");
  else
    r.add("expected_kernel", CheckStatus::Fail, "computed kernel spans a different subspace");

  std::string a2 = a.a2_ok ? "defect vanishes identically" : "nonzero defect";
  if (a.a2_witness)
    a2 += " " + to_string(*a.a2_witness, [&] {
      auto v = e.vars;
      v.push_back("t_");
      return v;
    }());
  r.add("expected_a2", pass_if(a.a2_ok == e.expected_a2),
        a2 + (e.expected_a2 ? " (expected to hold)" : " (expected to fail)"));

  for (std::size_t i = 0; i < e.expected_stratum_ranks.size(); ++i) {
    const auto &s = e.expected_stratum_ranks[i];
    const auto set = solve_linear(s.equations, n);
    const std::size_t rank = set ? rank_on_affine_set(a.map, *set) : 0;
    r.add("stratum[" + std::to_string(i) + "].rank", pass_if(set && rank == s.rank),
          "computed " + std::to_string(rank) + ", expected " + std::to_string(s.rank));
  }

  const auto pieces = e.pieces();
  const auto &gens = a.singular_generators;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string prefix = "piece[" + std::to_string(i) + "].";
    const std::size_t d = pieces[i].dimension();
    r.add(prefix + "dimension", pass_if(d == e.expected_singular_pieces[i].dimension),
          "computed " + std::to_string(d) + ", expected " +
              std::to_string(e.expected_singular_pieces[i].dimension));
    r.add(prefix + "contained", pass_if(contains_affine_set(gens, pieces[i])),
          "every generator vanishes on the piece");
    r.add(prefix + "dimension_bounds", pass_if(check_theorem1_bounds(n, a.k, d)),
          "max(k-1, n-k+1) <= " + std::to_string(d) + " <= n-2 with " + kn);
    check_piece_limits(a, pieces, i, opts, r);
  }

  if (!pieces.empty()) {
    const auto v = verify_union_of_affine(gens, pieces, opts.samples, opts.seed);
    r.add("union_of_affine",
          v.kind == VerdictKind::Consistent ? CheckStatus::HeuristicPass : CheckStatus::Fail,
          v.details());
  } else {
    r.add("singular_locus_empty", pass_if(generators_have_no_common_zero(gens, n)),
          gens.empty() ? "no generators" : "generators have no common zero");
  }

  if (e.expected_intersection_dim && pieces.size() >= 2) {
    std::optional<AffineSubspace> meet;
    std::string details;
    try {
      meet = intersect(pieces[0], pieces[1]);
      details = meet ? "dimension " + std::to_string(meet->dimension()) : "empty";
    } catch (const Error &ex) {
      details = ex.what();
    }
    r.add("pieces_intersection",
          pass_if(meet && meet->dimension() == *e.expected_intersection_dim),
          details + ", expected " + std::to_string(*e.expected_intersection_dim));
  }

  if (n <= 3 || a.k <= 2)
    r.add("corollary_empty_singular_set", pass_if(check_corollary(n, a.k, gens)),
          "n <= 3 or k <= 2 forces an empty singular set");
  else
    r.add("corollary_empty_singular_set", CheckStatus::Skip, "hypothesis n <= 3 or k <= 2 not met");

  if (!pieces.empty()) {
    const bool all = std::all_of(pieces.begin(), pieces.end(),
                                 [&](const Piece &p) { return p.dimension() + 2 == n; });
    r.add("observation.dimension_n_minus_2", CheckStatus::Skip,
          all ? "every piece has dimension n-2 (not asserted)"
              : "some piece has dimension below n-2 (not asserted)");
  }
  return r;
}

// JSON

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> print_all(const std::vector<Polynomial> &ps, const VariableNames &vars) {
  std::vector<std::string> out;
  for (const auto &p : ps)
    out.push_back(to_string(p, vars));
  return out;
}

std::vector<Polynomial> parse_all(const ojson &j, const VariableNames &vars) {
  std::vector<Polynomial> out;
  for (const auto &s : j)
    out.push_back(parse_polynomial(s.get<std::string>(), vars));
  return out;
}

ojson entry_json(const CatalogEntry &e) {
  ojson j;
  j["id"] = e.id;
  j["vars"] = e.vars;
  j["n"] = e.n();
  j["potential"] = e.potential ? ojson(to_string(*e.potential, e.vars)) : ojson(nullptr);
  j["map"] = print_all(e.components, e.vars);
  j["expected_k"] = e.expected_k;
  ojson kernel = ojson::array();
  for (const auto &v : e.expected_kernel)
    kernel.push_back(print_all(v, e.vars));
  j["expected_kernel"] = kernel;
  ojson pieces = ojson::array();
  for (const auto &p : e.expected_singular_pieces)
    pieces.push_back({{"equations", print_all(p.equations, e.vars)}, {"dimension", p.dimension}});
  j["expected_singular_pieces"] = pieces;
  ojson strata = ojson::array();
  for (const auto &s : e.expected_stratum_ranks)
    strata.push_back({{"equations", print_all(s.equations, e.vars)}, {"rank", s.rank}});
  j["expected_stratum_ranks"] = strata;
  j["expected_intersection_dim"] =
      e.expected_intersection_dim ? ojson(*e.expected_intersection_dim) : ojson(nullptr);
  j["expected_a2"] = e.expected_a2;
  j["notes"] = e.notes;
  return j;
}

CatalogEntry entry_from(const ojson &j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  std::string vs;
  for (const auto &v : j.at("vars"))
    vs += (vs.empty() ? "" : ",") + v.get<std::string>();
  e.vars = parse_variable_names(vs);
  if (j.at("n").get<std::size_t>() != e.n())
    throw InputError("catalog entry '" + e.id + "': n does not match vars");
  if (!j.at("potential").is_null())
    e.potential = parse_polynomial(j.at("potential").get<std::string>(), e.vars);
  e.components = parse_all(j.at("map"), e.vars);
  e.expected_k = j.at("expected_k").get<std::size_t>();
  for (const auto &v : j.at("expected_kernel"))
    e.expected_kernel.push_back(parse_all(v, e.vars));
  for (const auto &p : j.at("expected_singular_pieces"))
    e.expected_singular_pieces.push_back(
        {parse_all(p.at("equations"), e.vars), p.at("dimension").get<std::size_t>()});
  for (const auto &s : j.at("expected_stratum_ranks"))
    e.expected_stratum_ranks.push_back(
        {parse_all(s.at("equations"), e.vars), s.at("rank").get<std::size_t>()});
  if (!j.at("expected_intersection_dim").is_null())
    e.expected_intersection_dim = j.at("expected_intersection_dim").get<std::size_t>();
  e.expected_a2 = j.at("expected_a2").get<bool>();
  e.notes = j.at("notes").get<std::string>();
  return e;
}

template <class F> auto guarded(std::string_view text, F f) {
  try {
    return f(ojson::parse(text));
  } catch (const nlohmann::json::exception &ex) {
    throw InputError(std::string("malformed catalog: ") + ex.what());
  }
}

} // namespace

std::string to_json(const CatalogEntry &e, int indent) { return entry_json(e).dump(indent); }

std::string catalog_to_json(int indent) {
  ojson arr = ojson::array();
  for (const auto &e : catalog())
    arr.push_back(entry_json(e));
  return arr.dump(indent);
}

CatalogEntry entry_from_json(std::string_view text) {
  return guarded(text, [](const ojson &j) { return entry_from(j); });
}

std::vector<CatalogEntry> catalog_from_json(std::string_view text) {
  return guarded(text, [](const ojson &j) {
    if (!j.is_array())
      throw InputError("malformed catalog: expected an array of entries");
    std::vector<CatalogEntry> out;
    for (const auto &x : j)
      out.push_back(entry_from(x));
    return out;
  });
}

} // namespace affib
