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

#include "qcenter/poisson.hpp"

#include <algorithm>

#include "qcenter/linalg.hpp"
#include "qcenter/series.hpp"

namespace qcenter {

namespace {

Rational monomial_factorial(const Monomial& m) {
  Rational r = 1;
  for (auto e : m) r *= factorial(e);
  return r;
}

int lowest_degree(const Truncated& a) { return a.terms.is_zero() ? a.exact + 1 : degree(a.terms.begin()->first); }

Sym derivative(const Sym& f, std::size_t k) {
  Sym out;
  for (const auto& [m, c] : f) {
    if (m[k] == 0) continue;
    Monomial d = m;
    --d[k];
    out.add(d, c * m[k]);
  }
  return out;
}

// Product keeping only degrees ≤ cap.
Sym multiply_upto(const Sym& a, const Sym& b, int cap) {
  Sym out;
  for (const auto& [ma, ca] : a) {
    const int da = degree(ma);
    if (da > cap) break;
    for (const auto& [mb, cb] : b) {
      if (da + degree(mb) > cap) break;
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
      out.add(m, ca * cb);
    }
  }
  return out;
}

}  // namespace

Truncated Truncated::polynomial(const Sym& s, int cap) {
  if (sym_degree(s) > cap) throw BoundError("polynomial degree exceeds the function cap", sym_degree(s));
  return Truncated{s, cap};
}

Truncated operator*(const Truncated& a, const Truncated& b) {
  const int e = std::min(a.exact + lowest_degree(b), b.exact + lowest_degree(a));
  return Truncated{multiply_upto(a.terms, b.terms, e), e};
}

Truncated operator+(const Truncated& a, const Truncated& b) {
  const int e = std::min(a.exact, b.exact);
  return Truncated{sym_truncate(a.terms + b.terms, e), e};
}

Truncated operator-(const Truncated& a, const Truncated& b) {
  const int e = std::min(a.exact, b.exact);
  return Truncated{sym_truncate(a.terms - b.terms, e), e};
}

Truncated operator*(const Rational& c, const Truncated& a) { return Truncated{a.terms * c, a.exact}; }

bool agree(const Truncated& a, const Truncated& b, int* through) {
  const int e = std::min(a.exact, b.exact);
  if (through) *through = e;
  return sym_truncate(a.terms, e) == sym_truncate(b.terms, e);
}

Rational pairing(const Enveloping& ug, const Sym& f, const PBW& m) {
  const Sym u = ug.unsymmetrize(m);
  Rational r = 0;
  for (const auto& [mono, c] : f) {
    const Rational v = u.coefficient(mono);
    if (v != 0) r += c * v * monomial_factorial(mono);
  }
  return r;
}

DressingAction::DressingAction(const DoubleAlgebra& d, int cap)
    : double_(d), cap_(cap), minus_(VermaSide::minus, d) {
  if (cap < 0) throw BoundError("negative function cap", 0);
  const std::size_t n = d.half_dim();
  fields_.assign(2 * n, std::vector<Sym>(n));
  const auto monos = monomials_up_to(n, cap);
  for (const auto& beta : monos) {
    const PBW& s = ug().symmetrize(beta);
    const Rational scale = -1 / monomial_factorial(beta);
    for (std::size_t a = 0; a < 2 * n; ++a) {
      const std::vector<Rational> l = linear_part(minus_.act(static_cast<Letter>(a), s));
      for (std::size_t k = 0; k < n; ++k)
        if (l[k] != 0) fields_[a][k].add(beta, scale * l[k]);
    }
  }
}

const std::vector<std::pair<Letter, Rational>>& DressingAction::linear_part(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = linear_.find(w); it != linear_.end()) return *it->second;
  }
  std::vector<std::pair<Letter, Rational>> r;
  if (w.size() == 1) {
    r.emplace_back(w[0], Rational(1));
  } else if (w.size() > 1) {
    // sym(x^β) has no linear part, so L(w) = L(w − sym(x^β)), of lower degree.
    PBW rest(w, 1);
    rest.add_scaled(ug().symmetrize(exponents(w, half_dim())), -1);
    std::vector<Rational> acc(half_dim());
    for (const auto& [v, c] : rest)
      for (const auto& [k, q] : linear_part(v)) acc[k] += c * q;
    for (std::size_t k = 0; k < acc.size(); ++k)
      if (acc[k] != 0) r.emplace_back(static_cast<Letter>(k), acc[k]);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = linear_.try_emplace(w, std::make_unique<std::vector<std::pair<Letter, Rational>>>(std::move(r)));
  return *it->second;
}

std::vector<Rational> DressingAction::linear_part(const PBW& u) const {
  std::vector<Rational> out(half_dim());
  for (const auto& [w, c] : u)
    for (const auto& [k, q] : linear_part(w)) out[k] += c * q;
  return out;
}

const std::vector<Sym>& DressingAction::field(Letter a) const {
  if (a >= fields_.size()) throw InputError("dressing action: generator index out of range");
  return fields_[a];
}

Sym DressingAction::act(Letter a, const Sym& f) const {
  const auto& v = field(a);
  Sym out;
  for (std::size_t k = 0; k < half_dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Sym df = derivative(f, k);
    if (df.is_zero()) continue;
    out += multiply_upto(v[k], df, cap_);
  }
  return out;
}

Truncated DressingAction::act(Letter a, const Truncated& f) const {
  if (f.exact > cap_) throw BoundError("function known beyond the dressing table cap", f.exact);
  const int e = lowers_degree(a) ? f.exact - 1 : f.exact;
  const auto& v = field(a);
  Sym out;
  for (std::size_t k = 0; k < half_dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Sym df = derivative(f.terms, k);
    if (df.is_zero()) continue;
    out += multiply_upto(v[k], df, e);
  }
  return Truncated{std::move(out), e};
}

Truncated DressingAction::act(const Word& u, const Truncated& f) const {
  Truncated out = f;
  for (auto it = u.rbegin(); it != u.rend(); ++it) out = act(*it, out);
  return out;
}

Sym DressingAction::act_contragredient(Letter a, const Sym& f, int degree) const {
  Sym out;
  for (const auto& beta : monomials_up_to(half_dim(), degree)) {
    const PBW am = minus_.act(a, ug().symmetrize(beta));
    const Rational v = pairing(ug(), f, am);
    if (v != 0) out.add(beta, -v / monomial_factorial(beta));
  }
  return out;
}

Sym poisson_bracket(const DressingAction& act, const Sym& f, const Sym& g) {
  const std::size_t n = act.half_dim();
  Sym out;
  for (std::size_t i = 0; i < n; ++i) {
    const Sym a = act.act(static_cast<Letter>(n + i), f);
    if (a.is_zero()) continue;
    out += multiply_upto(a, act.act(static_cast<Letter>(i), g), act.cap());
  }
  return out;
}

Truncated poisson_bracket(const DressingAction& act, const Truncated& f, const Truncated& g) {
  const std::size_t n = act.half_dim();
  Truncated out{Sym{}, act.cap()};
  for (std::size_t i = 0; i < n; ++i)
    out = out + act.act(static_cast<Letter>(n + i), f) * act.act(static_cast<Letter>(i), g);
  return out;
}

std::vector<std::vector<Sym>> poisson_bivector(const DressingAction& act) {
  const std::size_t n = act.half_dim();
  std::vector<std::vector<Sym>> pi(n, std::vector<Sym>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) pi[k][l] = poisson_bracket(act, sym_variable(n, k), sym_variable(n, l));
  return pi;
}

Sym kks_bracket(const LieAlgebra& a, const Sym& f, const Sym& g) {
  const std::size_t n = a.dim();
  Sym out;
  for (std::size_t i = 0; i < n; ++i) {
    const Sym fi = derivative(f, i);
    if (fi.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.bracket(i, j).empty()) continue;
      const Sym gj = derivative(g, j);
      if (gj.is_zero()) continue;
      Sym lin;
      for (const auto& [k, c] : a.bracket(i, j)) lin.add_scaled(sym_variable(n, k), c);
      out += sym_multiply(sym_multiply(lin, fi), gj);
    }
  }
  return out;
}

PoissonCenter poisson_center(const DressingAction& act, int degree) {
  if (degree > act.cap()) throw BoundError("Poisson center degree exceeds the dressing table cap", degree);
  const std::size_t n = act.half_dim();
  const auto monos = monomials_up_to(n, degree);
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Monomial, SparseRow, MonomialOrder> eqs;
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const Sym img = sym_truncate(act.act(static_cast<Letter>(n + i), Sym(monos[j], 1)), degree);
      for (const auto& [m, c] : img) eqs[m].add(j, c);
    }
    for (auto& [m, r] : eqs) rows.push_back(std::move(r));
  }
  Echelon<Monomial, MonomialOrder> ech;
  for (const auto& v : kernel(rows, monos.size())) {
    Sym s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add(monos[j], v[j]);
    ech.insert(s);
  }
  ech.reduce_fully();
  PoissonCenter out;
  out.degree = degree;
  out.dims.assign(degree + 1, 0);
  for (const auto& [pivot, row] : ech.rows()) {
    out.basis.push_back(row);
    ++out.dims[qcenter::degree(pivot)];
  }
  return out;
}

std::vector<Sym> coordinate_vector(std::size_t n, std::size_t vars, std::size_t offset) {
  std::vector<Sym> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = sym_variable(vars, offset + k);
  return v;
}

std::vector<Sym> bch_coordinates(const LieAlgebra& g, const std::vector<Sym>& x, const std::vector<Sym>& y,
                                 int degree) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw InputError("bch_coordinates: coordinate vector size mismatch");
  using Vec = std::vector<Sym>;
  struct Value {
    Vec v;
    Value& operator+=(const Value& o) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
      return *this;
    }
    Value operator*(const Rational& c) const {
      Value r = *this;
      for (auto& s : r.v) s *= c;
      return r;
    }
  };
  auto bracket = [&](const Value& a, const Value& b) {
    Value r{Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
      if (a.v[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.v[j].is_zero() || g.bracket(i, j).empty()) continue;
        const Sym p = multiply_upto(a.v[i], b.v[j], degree);
        for (const auto& [k, c] : g.bracket(i, j)) r.v[k].add_scaled(p, c);
      }
    }
    return r;
  };
  const std::vector<Value> images{Value{x}, Value{y}};
  Value z = evaluate_lie_series<Value>(bch(degree), images, bracket, Value{Vec(n)});
  for (auto& s : z.v) s = sym_truncate(s, degree);
  return z.v;
}

Sym compose(const Sym& f, const std::vector<Sym>& coords, std::size_t vars, int degree) {
  std::vector<std::vector<Sym>> powers(coords.size());
  Sym out;
  for (const auto& [m, c] : f) {
    Sym term = sym_constant(vars, c);
    for (std::size_t k = 0; k < m.size() && !term.is_zero(); ++k) {
      if (m[k] == 0) continue;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(sym_constant(vars, 1));
      while (pk.size() <= m[k]) pk.push_back(multiply_upto(pk.back(), coords[k], degree));
      term = multiply_upto(term, pk[m[k]], degree);
    }
    out += term;
  }
  return out;
}

Sym bch_coproduct(const Sym& f, const LieAlgebra& g, int degree) {
  const std::size_t n = g.dim();
  const auto z = bch_coordinates(g, coordinate_vector(n, 2 * n, 0), coordinate_vector(n, 2 * n, n), degree);
  return compose(f, z, 2 * n, degree);
}

}  // namespace qcenter
