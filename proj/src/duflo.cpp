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

#include "qcenter/duflo.hpp"

#include <algorithm>
#include <numeric>

#include "qcenter/linalg.hpp"
#include "qcenter/poisson.hpp"

namespace qcenter {

namespace {

using Matrix = std::vector<std::vector<Sym>>;

Matrix ad_x(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n, std::vector<Sym>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [r, q] : a.bracket(i, c)) m[r][c].add_scaled(sym_variable(n, i), q);
  return m;
}

Matrix mat_mul(const Matrix& x, const Matrix& y, int cap) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<Sym>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) z[i][j] += sym_truncate(sym_multiply(x[i][k], y[k][j]), cap);
    }
  return z;
}

Sym trace(const Matrix& m) {
  Sym t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// Σ_k coeffs[k] u^k for u with zero constant term, truncated at cap.
Sym power_series(const Sym& u, const std::vector<Rational>& coeffs, std::size_t vars, int cap) {
  Sym out;
  Sym power = sym_constant(vars, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (power.is_zero()) break;
    out.add_scaled(power, coeffs[k]);
    power = sym_truncate(sym_multiply(power, u), cap);
  }
  return out;
}

Sym determinant(const std::vector<std::vector<const Sym*>>& m, int cap, std::size_t vars) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Sym det;
  do {
    // Sign from the inversion count.
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
    Sym term = sym_constant(vars, inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < k && !term.is_zero(); ++i)
      term = sym_truncate(sym_multiply(term, *m[i][perm[i]]), cap);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Sym partial(const Sym& f, std::size_t k) {
  Sym out;
  for (const auto& [m, c] : f) {
    if (m[k] == 0) continue;
    Monomial d = m;
    --d[k];
    out.add(d, c * m[k]);
  }
  return out;
}

// d/dt f(x + t[y, x]) at t = 0, for y = x_i.
Sym coadjoint_derivative(const LieAlgebra& a, std::size_t i, const Sym& f) {
  const std::size_t n = a.dim();
  Sym out;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : a.bracket(i, j)) {
      const Sym dk = partial(f, k);
      if (!dk.is_zero()) out += sym_multiply(sym_variable(n, j), dk) * c;
    }
  return out;
}

}  // namespace

std::vector<Rational> log_sinhc_coefficients(int degree) {
  std::vector<Rational> s(degree + 1), l(degree + 1);
  for (int k = 0; k <= degree; k += 2) {
    const int m = k / 2;
    Rational four_m = 1;
    for (int i = 0; i < m; ++i) four_m *= 4;
    s[k] = 1 / (four_m * factorial(2 * m + 1));
  }
  // (log s)' = s'/s, i.e. k s_k = Σ_{j=1..k} j l_j s_{k-j}.
  for (int k = 1; k <= degree; ++k) {
    Rational acc = k * s[k];
    for (int j = 1; j < k; ++j) acc -= j * l[j] * s[k - j];
    l[k] = acc / k;
  }
  return l;
}

Sym ad_power_trace(const LieAlgebra& a, int k) {
  const Matrix x = ad_x(a);
  Matrix p = x;
  for (int i = 1; i < k; ++i) p = mat_mul(p, x, k);
  return k == 0 ? sym_constant(a.dim(), Rational(static_cast<long>(a.dim()))) : trace(p);
}

DufloElement duflo_element(const LieAlgebra& a, int degree) {
  const std::size_t n = a.dim();
  const auto c = log_sinhc_coefficients(degree);
  const Matrix x = ad_x(a);
  Sym half_log;
  Matrix p = x;
  for (int k = 1; k <= degree; ++k) {
    if (k > 1) p = mat_mul(p, x, degree);
    if (k % 2 == 0 && c[k] != 0) half_log.add_scaled(trace(p), c[k] / 2);
  }
  std::vector<Rational> exp_coeffs;
  for (int m = 0; m <= degree; ++m) exp_coeffs.push_back(1 / factorial(m));
  return DufloElement{power_series(half_log, exp_coeffs, n, degree), degree};
}

DufloElement duflo_element_via_det(const LieAlgebra& a, int degree) {
  const std::size_t n = a.dim();
  if (n > 10) throw BoundError("determinant route limited to dimension 10", 10);
  const Matrix x = ad_x(a);
  Matrix N(n, std::vector<Sym>(n));
  Matrix p = x;
  Rational four_m = 1;
  for (int k = 1; k <= degree; ++k) {
    if (k > 1) p = mat_mul(p, x, degree);
    if (k % 2) continue;
    four_m *= 4;
    const Rational coeff = 1 / (four_m * factorial(k + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) N[i][j].add_scaled(p[i][j], coeff);
  }
  // det(1 + N) as the sum of all principal minors of N.
  Sym det = sym_constant(n, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    std::vector<std::vector<const Sym*>> sub(idx.size(), std::vector<const Sym*>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = &N[idx[r]][idx[c]];
    det += determinant(sub, degree, n);
  }
  Sym u = det - sym_constant(n, 1);
  std::vector<Rational> root;
  for (int k = 0; k <= degree; ++k) root.push_back(binomial(Rational(1, 2), static_cast<unsigned>(k)));
  return DufloElement{power_series(u, root, n, degree), degree};
}

Sym apply_symbol(const Sym& symbol, const Sym& f) {
  Sym out;
  for (const auto& [alpha, c] : symbol) {
    Sym t = f;
    for (std::size_t k = 0; k < alpha.size() && !t.is_zero(); ++k)
      for (int r = 0; r < alpha[k]; ++r) t = partial(t, k);
    out.add_scaled(t, c);
  }
  return out;
}

PBW duflo_map(const Enveloping& u, const DufloElement& j, const Sym& f) {
  if (sym_degree(f) > j.degree) throw BoundError("Duflo element truncated below the input degree", sym_degree(f));
  return u.symmetrize(apply_symbol(j.series, f));
}

std::vector<Sym> sym_invariants(const LieAlgebra& a, int d) {
  const std::size_t n = a.dim();
  const auto monos = monomials_of_degree(n, d);
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Monomial, SparseRow, MonomialOrder> eqs;
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const Sym img = kks_bracket(a, sym_variable(n, i), Sym(monos[j], 1));
      for (const auto& [m, c] : img) eqs[m].add(j, c);
    }
    for (auto& [m, r] : eqs) rows.push_back(std::move(r));
  }
  std::vector<Sym> span;
  for (const auto& v : kernel(rows, monos.size())) {
    Sym s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add(monos[j], v[j]);
    span.push_back(std::move(s));
  }
  return echelon_basis(span);
}

InvariantSubspace invariants(const Enveloping& u, int degree) {
  InvariantSubspace out;
  for (int d = 0; d <= degree; ++d) out.sym_basis.push_back(sym_invariants(u.algebra(), d));
  out.center_basis = u.center(degree);
  return out;
}

std::vector<CheckRecord> verify_duflo(const Enveloping& u, int degree) {
  const LieAlgebra& a = u.algebra();
  const auto& names = a.basis_names();
  const std::size_t n = a.dim();
  std::vector<CheckRecord> out;

  const DufloElement j = duflo_element(a, degree);
  const DufloElement j2 = duflo_element_via_det(a, degree);
  out.push_back(check("duflo.element.routes_agree", j.series == j2.series,
                      Json{{"degree", degree}, {"j_half", to_json(j.series, names)}}));
  bool invariant = true;
  for (std::size_t i = 0; i < n; ++i) invariant = invariant && coadjoint_derivative(a, i, j.series).is_zero();
  out.push_back(check("duflo.element.ad_invariant", invariant));
  bool even = true, unit = j.series.coefficient(Monomial(n, 0)) == 1;
  for (const auto& [m, c] : j.series) even = even && qcenter::degree(m) % 2 == 0;
  out.push_back(check("duflo.element.even_with_unit_constant", even && unit));

  const InvariantSubspace inv = invariants(u, degree);
  Json dims = Json::array();
  for (const auto& b : inv.sym_basis) dims.push_back(b.size());
  out.push_back(check("duflo.invariants.dimensions", true,
                      Json{{"sym_dims", dims}, {"center_dim", inv.center_basis.size()}}));

  struct Item {
    int deg;
    std::size_t index;
    Sym p;
  };
  std::vector<Item> items;
  for (int d = 1; d <= degree; ++d)
    for (std::size_t k = 0; k < inv.sym_basis[d].size(); ++k) items.push_back({d, k, inv.sym_basis[d][k]});

  auto label = [](const Item& it) { return "S" + std::to_string(it.deg) + "." + std::to_string(it.index); };
  for (const auto& it : items) {
    const PBW dp = duflo_map(u, j, it.p);
    bool central = true;
    Json witness = Json::object();
    for (std::size_t i = 0; i < n && central; ++i) {
      const PBW b = u.bracket(static_cast<Letter>(i), dp);
      if (!b.is_zero()) {
        central = false;
        witness = Json{{"generator", names[i]}, {"residual", to_json(b, names)}};
      }
    }
    out.push_back(check("duflo.central[" + label(it) + "]", central, witness));
  }

  for (std::size_t x = 0; x < items.size(); ++x)
    for (std::size_t y = x; y < items.size(); ++y) {
      if (items[x].deg + items[y].deg > degree) continue;
      const Sym pq = sym_multiply(items[x].p, items[y].p);
      const PBW lhs = u.multiply(duflo_map(u, j, items[x].p), duflo_map(u, j, items[y].p));
      const PBW rhs = duflo_map(u, j, pq);
      const std::string pair = label(items[x]) + "," + label(items[y]);
      Json w = Json::object();
      if (lhs != rhs) w["residual"] = to_json(u.unsymmetrize(lhs - rhs), names);
      out.push_back(check("duflo.multiplicative[" + pair + "]", lhs == rhs, w));

      const PBW plain = u.multiply(u.symmetrize(items[x].p), u.symmetrize(items[y].p)) - u.symmetrize(pq);
      CheckRecord r{"duflo.plain_symmetrization_defect[" + pair + "]", Status::pass,
                    Json{{"defect", to_json(u.unsymmetrize(plain), names)}, {"zero", plain.is_zero()}}};
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace qcenter
