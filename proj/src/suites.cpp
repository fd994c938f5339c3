// Copyright 2026 The qcenter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcenter/suites.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "qcenter/algebra_file.hpp"
#include "qcenter/associator.hpp"
#include "qcenter/duflo.hpp"
#include "qcenter/ek.hpp"
#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/poisson.hpp"

namespace qcenter {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json violation_witness(const Violation& v, const std::vector<std::string>& names) {
  Json w = Json::object();
  if (v.ok()) return w;
  Json idx = Json::array();
  for (auto i : v.indices) idx.push_back(i < names.size() ? names[i] : std::to_string(i));
  w["at"] = idx;
  w["residual"] = to_json(v.residual);
  return w;
}

struct Loaded {
  std::string bytes;
  AlgebraFile file;
};

Loaded load(const std::string& path) {
  if (path.empty()) throw InputError("this command needs an algebra file");
  Loaded l;
  l.bytes = slurp(path);
  l.file = parse_algebra_file(l.bytes);
  return l;
}

LieAlgebra lie_or_throw(const AlgebraFile& f) {
  auto v = validate_lie(f.bracket, f.basis);
  if (!v.ok()) throw ValidationError(v.violation);
  return *v.algebra;
}

LieBialgebra bialgebra_or_throw(const AlgebraFile& f) {
  const LieAlgebra a = lie_or_throw(f);
  auto v = validate_bialgebra(a, f.cobracket());
  if (!v.ok()) throw ValidationError(v.violation);
  return *v.bialgebra;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

void finish(SuiteResult& r, const SuiteOptions& opt, const Stopwatch& w) {
  if (opt.timing) r.report.set_timing(w.seconds());
}

// One record per axiom; axioms after the first failure are skipped.
void add_axiom_records(Report& rep, const char* prefix, const std::vector<Violation::Kind>& order,
                       const Violation& v, const std::vector<std::string>& names) {
  bool reached_failure = false;
  for (auto kind : order) {
    const std::string name = std::string(prefix) + "." + to_string(kind);
    if (reached_failure) {
      rep.add(CheckRecord{name, Status::skip, Json{{"reason", "an earlier axiom failed"}}});
    } else if (v.kind == kind) {
      rep.add(CheckRecord{name, Status::fail, violation_witness(v, names)});
      reached_failure = true;
    } else {
      rep.add(check(name, true));
    }
  }
}

std::vector<CheckRecord> double_records(const DoubleAlgebra& d, const LieBialgebra& b) {
  std::vector<CheckRecord> out;
  const auto& names = d.algebra().basis_names();
  out.push_back(check("double.jacobi", validate_lie(d.algebra().table()).ok()));
  const Violation inv = check_pairing_invariance(d);
  out.push_back(check("double.pairing_invariance", inv.ok(), violation_witness(inv, names)));
  const TwoTensor t = canonical_t(d);
  out.push_back(check("double.t_symmetric", is_symmetric(t, d.dim())));
  const Violation tv = check_t_invariance(d, t);
  out.push_back(check("double.t_invariance", tv.ok(), violation_witness(tv, names)));
  const StructureTable co = double_cobracket(d);
  const auto bv = validate_bialgebra(d.algebra(), co);
  out.push_back(check("double.cobracket_axioms", bv.ok(), violation_witness(bv.violation, names)));
  bool restricts = true;
  const std::size_t n = d.half_dim();
  for (std::size_t i = 0; i < n && restricts; ++i)
    for (std::size_t j = 0; j < d.dim() && restricts; ++j)
      for (std::size_t k = 0; k < d.dim() && restricts; ++k) {
        const Rational expect = (j < n && k < n) ? b.cobracket()(i, j, k) : Rational(0);
        restricts = co(i, j, k) == expect;
      }
  out.push_back(check("double.cobracket_restricts_to_g", restricts));
  return out;
}

Json center_json(const std::vector<Sym>& basis, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& z : basis) a.push_back(to_json(z, names));
  return a;
}

// Ordered-digest of several inputs.
std::string digest_of(std::initializer_list<std::string_view> parts) {
  std::string all;
  for (auto p : parts) {
    all += std::to_string(p.size());
    all += ':';
    all += p;
  }
  return fnv1a_hex(all);
}

}  // namespace

SuiteResult run_check(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const Loaded l = load(input);
  SuiteResult r{Report("check", fnv1a_hex(l.bytes)), {}};
  r.report.parameters() = Json{{"algebra", l.file.name}, {"dim", l.file.dim()}};
  const auto lv = validate_lie(l.file.bracket, l.file.basis);
  add_axiom_records(r.report, "lie", {Violation::Kind::antisymmetry, Violation::Kind::jacobi}, lv.violation,
                    l.file.basis);
  const std::vector<Violation::Kind> co_order{Violation::Kind::co_antisymmetry, Violation::Kind::co_jacobi,
                                              Violation::Kind::cocycle};
  if (!l.file.has_cobracket()) {
    for (auto k : co_order)
      r.report.add(CheckRecord{"bialgebra." + to_string(k), Status::skip, Json{{"reason", "no cobracket in file"}}});
  } else if (!lv.ok()) {
    for (auto k : co_order)
      r.report.add(CheckRecord{"bialgebra." + to_string(k), Status::skip, Json{{"reason", "not a Lie algebra"}}});
  } else {
    const auto bv = validate_bialgebra(*lv.algebra, l.file.cobracket());
    add_axiom_records(r.report, "bialgebra", co_order, bv.violation, l.file.basis);
  }
  finish(r, opt, sw);
  return r;
}

SuiteResult run_double(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const Loaded l = load(input);
  SuiteResult r{Report("double", fnv1a_hex(l.bytes)), {}};
  const LieBialgebra b = bialgebra_or_throw(l.file);
  const DoubleAlgebra d = drinfeld_double(b);
  r.report.parameters() = Json{{"algebra", l.file.name}, {"dim", l.file.dim()}};
  r.report.add(double_records(d, b));
  const StructureTable co = double_cobracket(d);
  AlgebraFile out = algebra_file(l.file.name + "-double", d.algebra(), &co);
  out.description = "Drinfeld double of " + l.file.name;
  const std::string text = serialize(out);
  r.report.results() = Json{{"dim", d.dim()}, {"file", out.name + ".json"}, {"double", Json::parse(text)}};
  r.artifacts.push_back(Artifact{out.name + ".json", text});
  finish(r, opt, sw);
  return r;
}

SuiteResult run_poisson_center(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const Loaded l = load(input);
  const int degree = opt.degree.value_or(2);
  if (degree < 0) throw InputError("--degree must be nonnegative");
  SuiteResult r{Report("poisson-center", fnv1a_hex(l.bytes)), {}};
  r.report.parameters() = Json{{"algebra", l.file.name}, {"degree", degree}};
  const DoubleAlgebra d = drinfeld_double(bialgebra_or_throw(l.file));
  const DressingAction act(d, degree);
  const std::size_t n = d.half_dim();
  const auto& names = d.bialgebra().dual().basis_names();

  // Independent route for the action on linear functions and monomials.
  {
    bool ok = true;
    Json w = Json::object();
    for (std::size_t a = 0; a < d.dim() && ok; ++a)
      for (const auto& m : monomials_up_to(n, std::min(degree, 2))) {
        const Sym f(m, 1);
        const Sym lhs = sym_truncate(act.act(static_cast<Letter>(a), f), degree);
        const Sym rhs = act.act_contragredient(static_cast<Letter>(a), f, degree);
        if (lhs != rhs) {
          ok = false;
          w = Json{{"generator", d.algebra().basis_names()[a]}, {"f", monomial_name(m, names)},
                   {"difference", to_json(lhs - rhs, names)}};
          break;
        }
      }
    r.report.add(check("poisson.dressing_matches_contragredient", ok, w));
  }
  const PoissonCenter pc = poisson_center(act, degree);
  {
    bool ok = true;
    Json w = Json::object();
    for (std::size_t z = 0; z < pc.basis.size() && ok; ++z)
      for (const auto& m : monomials_up_to(n, degree)) {
        const Truncated b =
            poisson_bracket(act, Truncated{pc.basis[z], degree}, Truncated::polynomial(Sym(m, 1), degree));
        if (!sym_truncate(b.terms, b.exact).is_zero()) {
          ok = false;
          w = Json{{"element", z}, {"f", monomial_name(m, names)}, {"bracket", to_json(b.terms, names)}};
          break;
        }
      }
    r.report.add(check("poisson_center.commutes_with_monomials", ok, w));
  }
  Json dims = Json::array();
  for (auto x : pc.dims) dims.push_back(x);
  r.report.results() = Json{{"dims", dims}, {"basis", center_json(pc.basis, names)}};
  finish(r, opt, sw);
  return r;
}

SuiteResult run_duflo(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const Loaded l = load(input);
  const int degree = opt.degree.value_or(4);
  if (degree < 0) throw InputError("--degree must be nonnegative");
  SuiteResult r{Report("duflo", fnv1a_hex(l.bytes)), {}};
  r.report.parameters() = Json{{"algebra", l.file.name}, {"degree", degree}};
  const Enveloping u(lie_or_throw(l.file));
  r.report.add(verify_duflo(u, degree));
  const DufloElement j = duflo_element(u.algebra(), degree);
  r.report.results() = Json{{"duflo_element", to_json(j.series, u.algebra().basis_names())}};
  finish(r, opt, sw);
  return r;
}

SuiteResult run_solve_associator(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const int degree = opt.degree.value_or(4);
  if (degree < 2) throw InputError("--degree must be at least 2");
  if (opt.hexagon_sign != 1 && opt.hexagon_sign != -1) throw InputError("--hexagon-sign must be + or -");
  std::string bytes;
  std::optional<AlgebraFile> file;
  if (!input.empty()) {
    Loaded l = load(input);
    bytes = std::move(l.bytes);
    file = std::move(l.file);
  }
  SuiteResult r{Report("solve-associator", digest_of({bytes})), {}};
  r.report.parameters() = Json{{"degree", degree}, {"even", opt.even}, {"hexagon_sign", opt.hexagon_sign}};
  const AssociatorSolution s = solve_associator(degree, opt.even, opt.hexagon_sign);
  r.report.add(verify_associator(s));
  Json degrees = Json::array();
  for (const auto& ds : s.per_degree)
    degrees.push_back(Json{{"degree", ds.degree}, {"unknowns", ds.unknowns.size()}, {"free", ds.nullspace.size()}});
  r.report.add(CheckRecord{"associator.solution_space", Status::pass, Json{{"per_degree", degrees}}});
  const Json sol = to_json(s);
  if (file) {
    r.report.parameters()["algebra"] = file->name;
    r.report.parameters()["hbar"] = opt.hbar;
    const DoubleAlgebra d = drinfeld_double(bialgebra_or_throw(*file));
    const Enveloping ud(d.algebra());
    const int h = std::min(opt.hbar, degree);
    const HTensor3 phi = specialize(s, d, ud, h);
    const NuElement nu = nu_element(phi, ud, h);
    r.report.add(verify_specialization(phi, nu, ud, h));
  }
  const std::string name = "associator-d" + std::to_string(degree) + (opt.even ? "-even" : "") +
                           (opt.hexagon_sign > 0 ? "-plus" : "-minus") + ".json";
  r.report.results() = Json{{"file", name}, {"solution", sol}};
  r.artifacts.push_back(Artifact{name, sol.dump(2) + "\n"});
  finish(r, opt, sw);
  return r;
}

SuiteResult run_ek_verify(const std::string& input, const SuiteOptions& opt) {
  Stopwatch sw;
  const Loaded l = load(input);
  EKVerifyOptions eo;
  eo.degree = opt.degree.value_or(3);
  eo.hbar_bound = opt.hbar;
  eo.jobs = opt.jobs;
  if (eo.degree < 1) throw InputError("--degree must be at least 1");
  if (eo.hbar_bound < 1) throw InputError("--hbar must be at least 1");
  std::string assoc_bytes;
  AssociatorSolution s;
  if (!opt.associator_path.empty()) {
    assoc_bytes = slurp(opt.associator_path);
    Json j;
    try {
      j = Json::parse(assoc_bytes);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("associator file: ") + e.what());
    }
    s = associator_from_json(j);
    if (s.degree < eo.hbar_bound) throw BoundError("associator solved below the hbar bound", eo.hbar_bound);
  } else {
    s = solve_associator(std::max(2, eo.hbar_bound), true, opt.hexagon_sign);
  }
  SuiteResult r{Report("ek-verify", digest_of({l.bytes, assoc_bytes})), {}};
  const int cap = ek_required_cap(eo);
  r.report.parameters() = Json{{"algebra", l.file.name},
                               {"hbar", eo.hbar_bound},
                               {"degree", eo.degree},
                               {"function_cap", cap},
                               {"seed", opt.seed},
                               {"crossing", "negative"},
                               {"associator",
                                Json{{"source", opt.associator_path.empty() ? "solved" : "file"},
                                     {"degree", s.degree},
                                     {"even", s.even},
                                     {"hexagon_sign", s.hexagon_sign}}}};
  r.report.add(verify_associator(s));
  const DoubleAlgebra d = drinfeld_double(bialgebra_or_throw(l.file));
  const EKContext ctx(d, s, eo.hbar_bound, cap);

  // Coherence on a 4-leaf and a 5-leaf word with generator vectors in each slot.
  const std::size_t n = d.half_dim();
  const Word g0{0}, g1{static_cast<Letter>(n > 1 ? 1 : 0)};
  r.report.add(pentagon_coherence(ctx, ctx.pure(Shape::parse("(((PM)O)P)"), {g0, g0, g1, g1}), "ek.coherence.PMOP"));
  r.report.add(
      pentagon_coherence(ctx, ctx.pure(Shape::parse("((((PM)O)P)M)"), {g0, g1, g0, Word{}, g1}), "ek.coherence.PMOPM"));
  r.report.add(ek_verify(ctx, eo));

  // Randomized associativity on polynomials with small integer coefficients.
  {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const auto monos = monomials_up_to(n, 1);
    bool ok = true;
    Json w = Json::object();
    const int samples = 4;
    for (int t = 0; t < samples && ok; ++t) {
      std::vector<std::vector<Truncated>> f(3);
      for (auto& fi : f) {
        Sym p;
        for (const auto& m : monos) p.add(m, coeff(rng));
        fi = constant_series(p, eo.hbar_bound, cap);
      }
      // Three linear factors: compare through total degree 3, within the requested degree.
      const int need = std::min(3, eo.degree);
      const auto left = ctx.star(ctx.star(f[0], f[1], need + eo.hbar_bound), f[2], need);
      const auto right = ctx.star(f[0], ctx.star(f[1], f[2], need + eo.hbar_bound), need);
      for (int k = 0; k <= eo.hbar_bound && ok; ++k) {
        int through = 0;
        if (!agree(left[k], right[k], &through) || through < need) {
          ok = false;
          w = Json{{"sample", t}, {"hbar_order", k}, {"through_degree", through}};
        }
      }
    }
    w["samples"] = samples;
    w["seed"] = opt.seed;
    r.report.add(check("ek.star.associativity_random_linear", ok, w));
  }
  finish(r, opt, sw);
  return r;
}

SuiteResult run_command(const std::string& command, const std::string& input, const SuiteOptions& opt) {
  if (command == "check") return run_check(input, opt);
  if (command == "double") return run_double(input, opt);
  if (command == "poisson-center") return run_poisson_center(input, opt);
  if (command == "duflo") return run_duflo(input, opt);
  if (command == "solve-associator") return run_solve_associator(input, opt);
  if (command == "ek-verify") return run_ek_verify(input, opt);
  throw InputError("unknown command '" + command + "'");
}

std::vector<std::string> bundled_algebras() {
  return {"abelian1.json",    "abelian2.json",    "heisenberg.json",     "nonabelian2.json",
          "sl2.json",         "so3.json",         "abelian1-kks.json",   "abelian2-kks.json",
          "heisenberg-kks.json", "nonabelian2-kks.json", "sl2-kks.json", "so3-kks.json",
          "sl2-standard.json"};
}

std::string bundled_path(const std::string& name) { return std::string(QCENTER_DATA_DIR) + "/" + name; }

}  // namespace qcenter
