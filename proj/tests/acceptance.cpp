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

// Acceptance run: one line per criterion, exact equality throughout, each
// criterion also bounded in wall time.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "qcenter/associator.hpp"
#include "qcenter/duflo.hpp"
#include "qcenter/ek.hpp"
#include "qcenter/poisson.hpp"
#include "qcenter/series.hpp"
#include "support.hpp"

namespace {

using namespace qcenter;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool all_pass(const std::vector<CheckRecord>& rs, std::string* why) {
  for (const auto& r : rs)
    if (r.status == Status::fail) {
      *why = r.name + " " + r.witness.dump();
      return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

Outcome bch_oracle() {
  Outcome o;
  for (int d = 1; d <= 6; ++d) {
    const NCSeries x = NCSeries::generator(2, d, 0), y = NCSeries::generator(2, d, 1);
    o.require(bch(d).to_nc() == nc_log(nc_exp(x) * nc_exp(y)), "bch differs from log(exp x exp y) at degree " + std::to_string(d));
  }
  const LieSeries z = bch(3);
  o.require(z.coefficient({0, 1}) == Rational(1, 2), "degree-2 coefficient");
  o.require(z.coefficient({0, 0, 1}) == Rational(1, 12), "coefficient of [x,[x,y]]");
  return o;
}

Outcome structure_suite() {
  Outcome o;
  for (const auto& name : qtest::corpus()) {
    const AlgebraFile f = qtest::bundled_file(name);
    const LieValidation lv = validate_lie(f.bracket, f.basis);
    o.require(lv.ok(), name + ": " + lv.violation.describe());
    if (!lv.ok()) continue;
    const BialgebraValidation bv = validate_bialgebra(*lv.algebra, f.cobracket());
    o.require(bv.ok(), name + ": " + bv.violation.describe());
    if (!bv.ok()) continue;
    const DoubleAlgebra d = drinfeld_double(*bv.bialgebra);
    o.require(validate_lie(d.algebra().table()).ok(), name + ": double Jacobi");
    o.require(check_pairing_invariance(d).ok(), name + ": pairing invariance");
    o.require(check_t_invariance(d, d.t()).ok(), name + ": t invariance");
  }
  return o;
}

Outcome semiclassics_and_duflo() {
  Outcome o;
  for (const char* name : {"sl2", "so3", "heisenberg"}) {
    const LieAlgebra a = qtest::bundled_lie(name);
    const Enveloping u(a);
    const auto monos = monomials_up_to(a.dim(), 4);
    for (const auto& mf : monos)
      for (const auto& mg : monos) {
        const Sym f(mf, 1), g(mg, 1);
        const HSym fg = star_pbw(u, f, g, 1), gf = star_pbw(u, g, f, 1);
        o.require((fg[0] - gf[0]).is_zero(), std::string(name) + ": order-0 commutator");
        o.require(qtest::to_poly(fg[1] - gf[1]) == qtest::linear_poisson(a.table(), qtest::to_poly(f), qtest::to_poly(g)),
                  std::string(name) + ": order-1 commutator differs from the KKS bracket");
      }
    std::string why;
    o.require(all_pass(verify_duflo(u, 4), &why), std::string(name) + ": " + why);
  }
  // sl2 (C, C): plain symmetrization defect by brute-force straightening.
  const LieAlgebra a = qtest::bundled_lie("sl2");
  const Enveloping u(a);
  o.require(!ad_power_trace(a, 2).is_zero(), "tr(ad²) vanishes on sl2");
  const Sym c = sym_invariants(a, 2).at(0);
  qtest::Words sc = qtest::brute_symmetrize(a.table(), c);
  qtest::Words defect = qtest::words_multiply(a.table(), sc, sc);
  for (const auto& [w, k] : qtest::brute_symmetrize(a.table(), sym_multiply(c, c))) defect[w] -= k;
  std::erase_if(defect, [](const auto& kv) { return kv.second == 0; });
  o.require(!defect.empty(), "plain symmetrization defect is zero");
  const PBW lib = u.multiply(u.symmetrize(c), u.symmetrize(c)) - u.symmetrize(sym_multiply(c, c));
  o.require(qtest::to_words(lib) == defect, "library defect differs from the brute force");
  if (o.ok) o.detail = "sl2 (C,C) defect = " + to_json(u.unsymmetrize(lib), a.basis_names()).dump();
  return o;
}

Outcome associator_solver() {
  Outcome o;
  for (int sign : {1, -1}) {
    const AssociatorSolution s = solve_associator(2, true, sign);
    o.require(s.per_degree.size() == 2 && s.per_degree[1].nullspace.empty() && s.per_degree[1].unknowns.size() == 1,
              "degree-2 even solution space is not a single point");
    o.require(s.phi_log.coefficient({0, 1}) == Rational(1, 24), "c ≠ 1/24 for hexagon sign " + std::to_string(sign));
  }
  for (bool even : {true, false})
    for (int sign : {1, -1}) {
      const AssociatorSolution s = solve_associator(4, even, sign);
      const NCSeries phi = s.phi();
      const DKAlgebra dk3(3, 4), dk4(4, 4);
      o.require(dk4.is_zero(pentagon_defect(phi, dk4)), "pentagon residual");
      o.require(dk3.is_zero(hexagon_defect(phi, dk3, 1, sign)), "hexagon 1 residual");
      o.require(dk3.is_zero(hexagon_defect(phi, dk3, 2, sign)), "hexagon 2 residual");
    }
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  const Enveloping ud(d.algebra());
  const AssociatorSolution s = solve_associator(4, true, 1);
  const HTensor3 phi = specialize(s, d, ud, 3);
  const NuElement nu = nu_element(phi, ud, 3);
  std::string why;
  o.require(all_pass(verify_specialization(phi, nu, ud, 3), &why), why);
  o.require(nu.nu[0] == PBW(Word{}, 1) && nu.nu[1].is_zero(), "ν ≢ 1 mod ħ²");
  for (const PBW& c : nu.nu)
    for (std::size_t a = 0; a < d.dim(); ++a) o.require(ud.bracket(static_cast<Letter>(a), c).is_zero(), "ν not central");
  for (std::size_t k = 0; k < nu.nu.size(); ++k) {
    PBW sq;
    for (std::size_t i = 0; i <= k; ++i) sq += ud.multiply(nu.sqrt[i], nu.sqrt[k - i]);
    o.require(sq == nu.nu[k], "(ν^½)² ≠ ν");
  }
  return o;
}

Outcome coherence() {
  Outcome o;
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  const AssociatorSolution s = solve_associator(2, true, 1);
  // Generator keys have degree 1; function factors are compared through degree cap − k at ħ^k.
  const EKContext ctx(d, s, 2, ek_required_cap(EKVerifyOptions{1, 2, 1}));
  const char kinds[] = {'P', 'M', 'O'};
  int words = 0;
  for (std::size_t leaves = 4; leaves <= 5; ++leaves) {
    const std::size_t total = leaves == 4 ? 81 : 243;
    for (std::size_t code = 0; code < total; code += leaves == 4 ? 1 : 7) {
      std::string w;
      for (std::size_t c = code, i = 0; i < leaves; ++i, c /= 3) w.push_back(kinds[c % 3]);
      Shape sh = Shape::leaf(static_cast<Leaf>(w[0]));
      for (std::size_t i = 1; i < w.size(); ++i) sh = Shape::join(sh, Shape::leaf(static_cast<Leaf>(w[i])));
      LeafKey key;
      for (std::size_t i = 0; i < w.size(); ++i) key.push_back(Word{static_cast<Letter>((code + i) % 3)});
      const CheckRecord r = pentagon_coherence(ctx, ctx.pure(sh, key), w);
      o.require(r.status == Status::pass, w + ": " + r.witness.dump());
      ++words;
    }
  }
  if (o.ok) o.detail = std::to_string(words) + " bracketed words (all 81 of length 4, every 7th of length 5)";
  return o;
}

std::map<std::string, SuiteResult>& ek_runs() {
  static std::map<std::string, SuiteResult> runs;
  if (runs.empty()) {
    SuiteOptions opt;
    opt.degree = 3;
    opt.hbar = 2;
    for (const char* name : {"sl2-kks", "sl2-standard"})
      runs.emplace(name, run_command("ek-verify", bundled_path(std::string(name) + ".json"), opt));
  }
  return runs;
}

const CheckRecord* find(const SuiteResult& r, const std::string& name) {
  for (const auto& c : r.report.checks())
    if (c.name == name) return &c;
  return nullptr;
}

Outcome records(const std::vector<std::string>& names, bool whole_report) {
  Outcome o;
  for (const auto& [alg, r] : ek_runs()) {
    for (const auto& n : names) {
      const CheckRecord* c = find(r, n);
      o.require(c != nullptr, alg + ": missing " + n);
      if (c) o.require(c->status == Status::pass, alg + ": " + n + " " + c->witness.dump());
    }
    if (whole_report) o.require(r.exit_code() == 0, alg + ": report has failures");
  }
  return o;
}

Outcome main_theorem() {
  return records({"ek.star.classical_limit", "ek.star.semiclassical", "ek.star.half_bracket", "ek.center.undeformed_product",
                  "ek.center.central", "ek.center.converse_order_hbar"},
                 true);
}

Outcome associativity() { return records({"ek.star.associativity", "ek.star.associativity_random_linear"}, false); }

std::string capture(const std::string& cmd, int* code) {
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  *code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string(QCENTER_CLI) + " ek-verify " + bundled_path("sl2-standard.json") + " --jobs 2";
  int c1 = 0, c2 = 0;
  const std::string a = capture(cmd, &c1), b = capture(cmd, &c2);
  o.require(c1 == 0 && c2 == 0, "ek-verify exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
  o.require(!a.empty() && a == b, "reports differ between runs");
  SuiteOptions opt;
  opt.degree = 3;
  o.require(run_command("ek-verify", bundled_path("sl2-standard.json"), opt).report.to_json() == a,
            "library report differs from CLI output");
  if (o.ok) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "BCH oracle equivalence through degree 6", 5, bch_oracle},
      {2, "structure suite on the bundled corpus", 10, structure_suite},
      {3, "PBW star semiclassics, Duflo multiplicativity, sl2 (C,C) defect", 60, semiclassics_and_duflo},
      {4, "associator solver, residuals and nu for the sl2 double", 120, associator_solver},
      {5, "pentagon coherence on 4- and 5-leaf words through hbar^2", 60, coherence},
      {6, "star product and quantized Poisson center on sl2 bialgebras", 600, main_theorem},
      {7, "star associativity through hbar^2", 600, associativity},
      {8, "byte-identical ek-verify reports", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail = "over the time budget";
    }
    if (!o.ok) ++failures;
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.2f s of %.0f s)", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                  c.budget_seconds);
    std::cout << line;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) + " criteria" : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
