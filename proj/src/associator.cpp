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

#include "qcenter/associator.hpp"

#include <map>

namespace qcenter {

namespace {

struct TopWordFirst {
  bool operator()(const Word& a, const Word& b) const { return WordOrder()(b, a); }
};

void all_words(std::size_t alphabet, int len, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t l = 0; l < alphabet; ++l) {
    cur.push_back(static_cast<Letter>(l));
    all_words(alphabet, len, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> words_of_length(std::size_t alphabet, int len) {
  std::vector<Word> out;
  Word cur;
  all_words(alphabet, len, cur, out);
  return out;
}

const char* kLetters[] = {"X", "Y"};

std::string xy_name(const Word& w) {
  std::string s;
  for (Letter l : w) s += kLetters[l];
  return s;
}

Word xy_parse(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == 'X') w.push_back(0);
    else if (c == 'Y') w.push_back(1);
    else throw InputError("associator file: bad letter in word '" + s + "'");
  }
  return w;
}

}  // namespace

struct DKAlgebra::Impl {
  std::vector<Echelon<Word, TopWordFirst>> ech;
};

DKAlgebra::~DKAlgebra() = default;
DKAlgebra::DKAlgebra(DKAlgebra&&) noexcept = default;

DKAlgebra::DKAlgebra(int strands, int max_degree)
    : strands_(strands), max_degree_(max_degree), impl_(std::make_unique<Impl>()) {
  if (strands != 3 && strands != 4) throw InputError("Drinfeld-Kohno algebra: strands must be 3 or 4");
  if (max_degree < 0) throw InputError("Drinfeld-Kohno algebra: negative degree");
  impl_->ech.resize(max_degree + 1);
  const std::vector<NCSeries> rel = relations();
  for (int d = 2; d <= max_degree; ++d) {
    auto& ech = impl_->ech[d];
    for (int left = 0; left <= d - 2; ++left) {
      const auto us = words_of_length(generator_count(), left);
      const auto vs = words_of_length(generator_count(), d - 2 - left);
      for (const auto& r : rel)
        for (const auto& u : us)
          for (const auto& v : vs) {
            Combination<Word, TopWordFirst> row;
            for (const auto& [w, c] : r.terms()) {
              Word x = u;
              x.insert(x.end(), w.begin(), w.end());
              x.insert(x.end(), v.begin(), v.end());
              row.add(x, c);
            }
            ech.insert(row);
          }
    }
    ech.reduce_fully();
  }
}

Letter DKAlgebra::generator(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > strands_ || i == j) throw InputError("Drinfeld-Kohno algebra: bad generator index");
  int idx = 0;
  for (int a = 1; a <= strands_; ++a)
    for (int b = a + 1; b <= strands_; ++b) {
      if (a == i && b == j) return static_cast<Letter>(idx);
      ++idx;
    }
  throw InternalError("unreachable generator index");
}

std::string DKAlgebra::generator_name(Letter g) const {
  int idx = 0;
  for (int a = 1; a <= strands_; ++a)
    for (int b = a + 1; b <= strands_; ++b)
      if (idx++ == g) return "t" + std::to_string(a) + std::to_string(b);
  throw InputError("Drinfeld-Kohno algebra: generator out of range");
}

NCSeries DKAlgebra::t(int i, int j) const { return NCSeries::generator(generator_count(), max_degree_, generator(i, j)); }

std::vector<NCSeries> DKAlgebra::relations() const {
  std::vector<NCSeries> rel;
  const int n = strands_;
  // Disjoint pairs commute.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = a + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (c == b || d == b) continue;
          rel.push_back(commutator(t(a, b), t(c, d)));
        }
  // [t_ij, t_ik + t_jk] for distinct i, j, k with i < j.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        rel.push_back(commutator(t(i, j), t(i, k) + t(j, k)));
      }
  return rel;
}

std::size_t DKAlgebra::dimension(int d) const {
  if (d < 0 || d > max_degree_) throw BoundError("Drinfeld-Kohno degree beyond the computed range", d);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= generator_count();
  return total - impl_->ech[d].rank();
}

std::vector<Word> DKAlgebra::normal_words(int d) const {
  if (d < 0 || d > max_degree_) throw BoundError("Drinfeld-Kohno degree beyond the computed range", d);
  std::vector<Word> out;
  for (auto& w : words_of_length(generator_count(), d))
    if (!impl_->ech[d].is_pivot(w)) out.push_back(std::move(w));
  return out;
}

NCSeries DKAlgebra::reduce(const NCSeries& s) const {
  if (s.alphabet_size() != generator_count()) throw InputError("Drinfeld-Kohno reduce: alphabet mismatch");
  std::vector<Combination<Word, TopWordFirst>> parts(max_degree_ + 1);
  for (const auto& [w, c] : s.terms()) {
    if (degree(w) > max_degree_) throw BoundError("Drinfeld-Kohno reduce: word beyond the computed range", degree(w));
    parts[degree(w)].add(w, c);
  }
  NCSeries out(s.alphabet_size(), s.truncation());
  for (int d = 0; d <= max_degree_; ++d) {
    if (parts[d].is_zero()) continue;
    for (const auto& [w, c] : impl_->ech[d].reduce(parts[d])) out.add_term(w, c);
  }
  return out;
}

std::vector<std::size_t> dk_hilbert_series(int strands, int degree) {
  std::vector<std::size_t> h(degree + 1, 0);
  h[0] = 1;
  for (int j = 1; j < strands; ++j)
    for (int k = 1; k <= degree; ++k) h[k] += j * h[k - 1];
  return h;
}

NCSeries associator_at(const NCSeries& phi, const NCSeries& a, const NCSeries& b) {
  const std::vector<NCSeries> images{a.truncated(phi.truncation()), b.truncated(phi.truncation())};
  return substitute(phi, images);
}

NCSeries pentagon_defect(const NCSeries& phi, const DKAlgebra& dk) {
  const int tr = phi.truncation();
  auto t = [&](int i, int j) { return dk.t(i, j).truncated(tr); };
  const NCSeries lhs = associator_at(phi, t(1, 2), t(2, 3) + t(2, 4)) * associator_at(phi, t(1, 3) + t(2, 3), t(3, 4));
  const NCSeries rhs = associator_at(phi, t(2, 3), t(3, 4)) *
                       associator_at(phi, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)) * associator_at(phi, t(1, 2), t(2, 3));
  return lhs - rhs;
}

NCSeries hexagon_defect(const NCSeries& phi, const DKAlgebra& dk, int which, int sign) {
  const int tr = phi.truncation();
  auto t = [&](int i, int j) { return dk.t(i, j).truncated(tr); };
  auto r = [&](const NCSeries& x) { return nc_exp(x * ratio(sign, 2)); };
  if (which == 1) {
    const NCSeries lhs = r(t(1, 3) + t(2, 3));
    const NCSeries rhs = associator_at(phi, t(1, 3), t(1, 2)) * r(t(1, 3)) *
                         nc_inverse(associator_at(phi, t(1, 3), t(2, 3))) * r(t(2, 3)) *
                         associator_at(phi, t(1, 2), t(2, 3));
    return lhs - rhs;
  }
  const NCSeries lhs = r(t(1, 2) + t(1, 3));
  const NCSeries rhs = nc_inverse(associator_at(phi, t(2, 3), t(1, 3))) * r(t(1, 3)) *
                       associator_at(phi, t(1, 2), t(1, 3)) * r(t(1, 2)) *
                       nc_inverse(associator_at(phi, t(1, 2), t(2, 3)));
  return lhs - rhs;
}

namespace {

// Degree-d linear effect of a Lie element ψ of degree d on each defect.
NCSeries pentagon_linear(const NCSeries& psi, const DKAlgebra& dk) {
  const int tr = psi.truncation();
  auto t = [&](int i, int j) { return dk.t(i, j).truncated(tr); };
  return associator_at(psi, t(1, 2), t(2, 3) + t(2, 4)) + associator_at(psi, t(1, 3) + t(2, 3), t(3, 4)) -
         associator_at(psi, t(2, 3), t(3, 4)) - associator_at(psi, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)) -
         associator_at(psi, t(1, 2), t(2, 3));
}

NCSeries hexagon_linear(const NCSeries& psi, const DKAlgebra& dk, int which) {
  const int tr = psi.truncation();
  auto t = [&](int i, int j) { return dk.t(i, j).truncated(tr); };
  if (which == 1)
    return associator_at(psi, t(1, 3), t(2, 3)) - associator_at(psi, t(1, 3), t(1, 2)) -
           associator_at(psi, t(1, 2), t(2, 3));
  return associator_at(psi, t(2, 3), t(1, 3)) - associator_at(psi, t(1, 2), t(1, 3)) +
         associator_at(psi, t(1, 2), t(2, 3));
}

// Appends the coordinates of the degree-d part of a reduced element as
// equation entries; `block` separates the three systems.
void collect(std::map<std::pair<int, Word>, SparseRow>& eqs, std::map<std::pair<int, Word>, Rational>& rhs, int block,
             const NCSeries& reduced, int d, std::size_t unknown) {
  for (const auto& [w, c] : reduced.terms()) {
    if (degree(w) != d) continue;
    if (unknown == static_cast<std::size_t>(-1))
      rhs[{block, w}] -= c;
    else
      eqs[{block, w}].add(unknown, c);
  }
}

}  // namespace

AssociatorSolution solve_associator(int degree, bool even, int hexagon_sign) {
  if (degree < 2) throw InputError("associator degree must be at least 2");
  if (hexagon_sign != 1 && hexagon_sign != -1) throw InputError("hexagon sign must be +1 or -1");
  const DKAlgebra dk3(3, degree), dk4(4, degree);
  AssociatorSolution sol;
  sol.degree = degree;
  sol.even = even;
  sol.hexagon_sign = hexagon_sign;
  sol.phi_log = LieSeries(2, degree);

  for (int d = 1; d <= degree; ++d) {
    DegreeSolution ds;
    ds.degree = d;
    for (const auto& w : lyndon_words(2, d))
      if (static_cast<int>(w.size()) == d) ds.unknowns.push_back(w);

    const NCSeries phi = nc_exp(sol.phi_log.to_nc().truncated(d));
    std::map<std::pair<int, Word>, SparseRow> eqs;
    std::map<std::pair<int, Word>, Rational> rhs;
    const std::size_t none = static_cast<std::size_t>(-1);
    collect(eqs, rhs, 0, dk4.reduce(pentagon_defect(phi, dk4)), d, none);
    collect(eqs, rhs, 1, dk3.reduce(hexagon_defect(phi, dk3, 1, hexagon_sign)), d, none);
    collect(eqs, rhs, 2, dk3.reduce(hexagon_defect(phi, dk3, 2, hexagon_sign)), d, none);

    if (even && d % 2 == 1) {
      ds.imposed_zero = true;
      if (!rhs.empty()) {
        for (const auto& [k, v] : rhs)
          if (v != 0)
            throw InternalError("even associator: nonzero odd-degree defect at degree " + std::to_string(d));
      }
      ds.particular.assign(ds.unknowns.size(), Rational(0));
      sol.per_degree.push_back(std::move(ds));
      continue;
    }

    for (std::size_t l = 0; l < ds.unknowns.size(); ++l) {
      const NCSeries psi = lyndon_bracket(ds.unknowns[l], 2, d);
      collect(eqs, rhs, 0, dk4.reduce(pentagon_linear(psi, dk4)), d, l);
      collect(eqs, rhs, 1, dk3.reduce(hexagon_linear(psi, dk3, 1)), d, l);
      collect(eqs, rhs, 2, dk3.reduce(hexagon_linear(psi, dk3, 2)), d, l);
    }
    // Union of equation keys, in a fixed order.
    std::map<std::pair<int, Word>, int> keys;
    for (const auto& [k, r] : eqs) keys[k];
    for (const auto& [k, v] : rhs) keys[k];
    std::vector<SparseRow> rows;
    std::vector<Rational> b;
    for (const auto& [k, unused] : keys) {
      auto it = eqs.find(k);
      rows.push_back(it == eqs.end() ? SparseRow{} : it->second);
      auto jt = rhs.find(k);
      b.push_back(jt == rhs.end() ? Rational(0) : jt->second);
    }
    const AffineSolution a = solve_affine(rows, b, ds.unknowns.size());
    if (!a.consistent)
      throw InternalError("associator equations inconsistent at degree " + std::to_string(d));
    ds.particular = a.particular;
    ds.nullspace = a.nullspace;
    for (std::size_t l = 0; l < ds.unknowns.size(); ++l)
      if (a.particular[l] != 0) sol.phi_log.add_term(ds.unknowns[l], a.particular[l]);
    sol.per_degree.push_back(std::move(ds));
  }
  return sol;
}

std::vector<CheckRecord> verify_associator(const AssociatorSolution& s) {
  std::vector<CheckRecord> out;
  const DKAlgebra dk3(3, s.degree), dk4(4, s.degree);
  const NCSeries phi = s.phi();

  auto residual = [](const NCSeries& r, const DKAlgebra& dk) {
    Json w = Json::object();
    w["nonzero_terms"] = r.terms().size();
    if (!r.is_zero()) {
      const auto& [word, c] = *r.terms().begin();
      std::string name;
      for (Letter l : word) name += (name.empty() ? "" : " ") + dk.generator_name(l);
      w["first_term"] = Json{{"word", name}, {"coefficient", qcenter::to_string(c)}};
    }
    return w;
  };
  const NCSeries pent = dk4.reduce(pentagon_defect(phi, dk4));
  out.push_back(check("associator.pentagon", pent.is_zero(), residual(pent, dk4)));
  for (int which : {1, 2}) {
    const NCSeries hex = dk3.reduce(hexagon_defect(phi, dk3, which, s.hexagon_sign));
    out.push_back(check("associator.hexagon" + std::to_string(which), hex.is_zero(), residual(hex, dk3)));
  }
  out.push_back(check("associator.degree1_zero", s.phi_log.homogeneous_part(1).is_zero()));
  out.push_back(check("associator.group_like", [&] {
    const NCSeries logphi = nc_log(phi);
    NCTensor expected;
    for (const auto& [w, c] : logphi.terms()) {
      expected.add({w, Word{}}, c);
      expected.add({Word{}, w}, c);
    }
    return shuffle_coproduct(logphi) == expected;
  }()));
  if (s.even) {
    NCSeries neg(2, s.degree);
    for (const auto& [w, c] : phi.terms()) neg.add_term(w, w.size() % 2 ? -c : c);
    out.push_back(check("associator.even", neg == phi));
  }
  // Φ(Y, X) Φ(X, Y) = 1.
  const NCSeries x = NCSeries::generator(2, s.degree, 0), y = NCSeries::generator(2, s.degree, 1);
  const NCSeries flip = associator_at(phi, y, x) * phi - NCSeries::constant(2, s.degree, 1);
  CheckRecord r{"associator.flip_inverse", flip.is_zero() ? Status::pass : Status::warn,
                Json{{"nonzero_terms", flip.terms().size()}}};
  out.push_back(std::move(r));
  return out;
}

// --- U(d)^{⊗3} ----------------------------------------------------------

namespace {

Tensor3 tensor3_multiply(const Enveloping& ud, const Tensor3& a, const Tensor3& b) {
  Tensor3 out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::array<PBW, 3> f;
      for (int s = 0; s < 3; ++s) f[s] = ud.multiply(PBW(ka[s], 1), PBW(kb[s], 1));
      const Rational c = ca * cb;
      for (const auto& [w0, c0] : f[0])
        for (const auto& [w1, c1] : f[1])
          for (const auto& [w2, c2] : f[2]) out.add({w0, w1, w2}, c * c0 * c1 * c2);
    }
  return out;
}

HPBW hpbw_multiply(const Enveloping& ud, const HPBW& a, const HPBW& b, int h) {
  HPBW out(h + 1);
  for (int i = 0; i <= h; ++i)
    for (int j = 0; i + j <= h; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += ud.multiply(a[i], b[j]);
  return out;
}

}  // namespace

HTensor3 specialize(const AssociatorSolution& s, const DoubleAlgebra& d, const Enveloping& ud, int hbar_bound) {
  if (hbar_bound > s.degree)
    throw BoundError("specialization needs an associator solved at least to the hbar bound", hbar_bound);
  Tensor3 tx, ty;
  for (const auto& term : d.t()) {
    tx.add({Word{term.left}, Word{term.right}, Word{}}, term.coeff);
    ty.add({Word{}, Word{term.left}, Word{term.right}}, term.coeff);
  }
  const NCSeries phi = nc_exp(s.phi_log.to_nc().truncated(hbar_bound));
  HTensor3 out(hbar_bound + 1);
  std::map<Word, Tensor3, WordOrder> memo;
  memo[Word{}] = Tensor3({Word{}, Word{}, Word{}}, 1);
  for (const auto& [w, c] : phi.terms()) {
    // Build images prefix by prefix.
    for (std::size_t len = 1; len <= w.size(); ++len) {
      const Word prefix(w.begin(), w.begin() + len);
      if (memo.count(prefix)) continue;
      const Word shorter(w.begin(), w.begin() + len - 1);
      memo[prefix] = tensor3_multiply(ud, memo.at(shorter), w[len - 1] == 0 ? tx : ty);
    }
    out[w.size()].add_scaled(memo.at(w), c);
  }
  return out;
}

NuElement nu_element(const HTensor3& phi, const Enveloping& ud, int hbar_bound) {
  const int h = hbar_bound;
  HPBW w(h + 1);
  for (int k = 0; k <= h && k < static_cast<int>(phi.size()); ++k)
    for (const auto& [key, c] : phi[k]) {
      const PBW m = ud.multiply(ud.multiply(PBW(key[0], 1), ud.antipode(PBW(key[1], 1))), PBW(key[2], 1));
      w[k].add_scaled(m, c);
    }
  if (w[0] != PBW(Word{}, 1)) throw InternalError("nu element: contracted associator has constant term != 1");
  NuElement out;
  out.nu.assign(h + 1, PBW{});
  out.nu[0] = PBW(Word{}, 1);
  for (int k = 1; k <= h; ++k)
    for (int j = 1; j <= k; ++j) out.nu[k] -= ud.multiply(out.nu[k - j], w[j]);
  // Binomial series for (1 + u)^{1/2}.
  HPBW u = out.nu;
  u[0] = PBW{};
  HPBW power(h + 1);
  power[0] = PBW(Word{}, 1);
  out.sqrt.assign(h + 1, PBW{});
  for (int k = 0; k <= h; ++k) {
    const Rational b = binomial(Rational(1, 2), static_cast<unsigned>(k));
    for (int i = 0; i <= h; ++i) out.sqrt[i].add_scaled(power[i], b);
    power = hpbw_multiply(ud, power, u, h);
  }
  return out;
}

std::vector<CheckRecord> verify_specialization(const HTensor3& phi, const NuElement& nu, const Enveloping& ud,
                                               int hbar_bound) {
  std::vector<CheckRecord> out;
  const auto& names = ud.algebra().basis_names();
  out.push_back(check("specialize.constant_term", phi[0] == Tensor3({Word{}, Word{}, Word{}}, 1)));
  bool invariant = true;
  Json witness = Json::object();
  for (std::size_t a = 0; a < ud.dim() && invariant; ++a) {
    Tensor3 delta;
    const Word x{static_cast<Letter>(a)};
    delta.add({x, Word{}, Word{}}, 1);
    delta.add({Word{}, x, Word{}}, 1);
    delta.add({Word{}, Word{}, x}, 1);
    for (int k = 0; k <= hbar_bound; ++k) {
      const Tensor3 c = tensor3_multiply(ud, delta, phi[k]) - tensor3_multiply(ud, phi[k], delta);
      if (!c.is_zero()) {
        invariant = false;
        witness = Json{{"generator", names[a]}, {"hbar_order", k}, {"nonzero_terms", c.size()}};
        break;
      }
    }
  }
  out.push_back(check("specialize.ad_invariant", invariant, witness));
  out.push_back(check("nu.unit_mod_hbar2", nu.nu[0] == PBW(Word{}, 1) && (hbar_bound < 1 || nu.nu[1].is_zero())));
  bool central = true;
  Json cw = Json::object();
  for (int k = 0; k <= hbar_bound && central; ++k)
    for (std::size_t a = 0; a < ud.dim(); ++a) {
      const PBW b = ud.bracket(static_cast<Letter>(a), nu.nu[k]);
      if (!b.is_zero()) {
        central = false;
        cw = Json{{"generator", names[a]}, {"hbar_order", k}, {"residual", to_json(b, names)}};
        break;
      }
    }
  out.push_back(check("nu.central", central, cw));
  const HPBW sq = hpbw_multiply(ud, nu.sqrt, nu.sqrt, hbar_bound);
  out.push_back(check("nu.sqrt_squared", sq == nu.nu));
  Json terms = Json::array();
  for (int k = 0; k <= hbar_bound; ++k) terms.push_back(to_json(nu.nu[k], names));
  out.push_back(CheckRecord{"nu.value", Status::pass, Json{{"by_hbar_order", terms}}});
  return out;
}

Json to_json(const AssociatorSolution& s) {
  Json j;
  j["format"] = "qcenter-associator";
  j["version"] = 1;
  j["degree"] = s.degree;
  j["even"] = s.even;
  j["hexagon_sign"] = s.hexagon_sign;
  j["letters"] = Json::array({"X", "Y"});
  j["basis"] = "lyndon-standard-bracketing";
  Json phi = Json::object();
  for (const auto& [w, c] : s.phi_log.terms()) phi[xy_name(w)] = qcenter::to_string(c);
  j["phi_log"] = phi;
  Json degrees = Json::array();
  for (const auto& ds : s.per_degree) {
    Json e;
    e["degree"] = ds.degree;
    Json unk = Json::array();
    for (const auto& w : ds.unknowns) unk.push_back(xy_name(w));
    e["unknowns"] = unk;
    e["imposed_zero"] = ds.imposed_zero;
    e["particular"] = to_json(ds.particular);
    Json ns = Json::array();
    for (const auto& v : ds.nullspace) ns.push_back(to_json(v));
    e["nullspace"] = ns;
    degrees.push_back(std::move(e));
  }
  j["per_degree"] = degrees;
  return j;
}

AssociatorSolution associator_from_json(const Json& j) {
  try {
    if (j.at("format") != "qcenter-associator") throw InputError("associator file: wrong format tag");
    if (j.at("version") != 1) throw InputError("associator file: unsupported version");
    AssociatorSolution s;
    s.degree = j.at("degree").get<int>();
    if (s.degree < 1) throw InputError("associator file: degree must be at least 1");
    s.even = j.at("even").get<bool>();
    s.hexagon_sign = j.at("hexagon_sign").get<int>();
    if (s.hexagon_sign != 1 && s.hexagon_sign != -1) throw InputError("associator file: hexagon_sign must be 1 or -1");
    s.phi_log = LieSeries(2, s.degree);
    for (const auto& [k, v] : j.at("phi_log").items()) {
      const Word w = xy_parse(k);
      if (static_cast<int>(w.size()) > s.degree) throw InputError("associator file: word beyond the degree");
      s.phi_log.add_term(w, parse_rational(v.get<std::string>()));
    }
    if (j.contains("per_degree"))
      for (const auto& e : j.at("per_degree")) {
        DegreeSolution ds;
        ds.degree = e.at("degree").get<int>();
        for (const auto& u : e.at("unknowns")) ds.unknowns.push_back(xy_parse(u.get<std::string>()));
        ds.imposed_zero = e.value("imposed_zero", false);
        for (const auto& q : e.at("particular")) ds.particular.push_back(parse_rational(q.get<std::string>()));
        for (const auto& v : e.at("nullspace")) {
          std::vector<Rational> row;
          for (const auto& q : v) row.push_back(parse_rational(q.get<std::string>()));
          ds.nullspace.push_back(std::move(row));
        }
        s.per_degree.push_back(std::move(ds));
      }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("associator file: ") + e.what());
  }
}

}  // namespace qcenter
