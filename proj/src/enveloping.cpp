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

#include "qcenter/enveloping.hpp"

#include <algorithm>

#include "qcenter/linalg.hpp"

namespace qcenter {

namespace {

struct TopWordFirst {
  bool operator()(const Word& a, const Word& b) const { return WordOrder()(b, a); }
};
struct TopMonomialFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return MonomialOrder()(b, a); }
};

template <class Key, class Order, class Rev>
std::vector<Combination<Key, Order>> echelon_generic(const std::vector<Combination<Key, Order>>& span) {
  Echelon<Key, Rev> ech;
  for (const auto& v : span) {
    Combination<Key, Rev> r;
    for (const auto& [k, c] : v) r.add(k, c);
    ech.insert(r);
  }
  ech.reduce_fully();
  std::vector<Combination<Key, Order>> out;
  // Rows are keyed by pivot, largest first; report smallest pivot first.
  for (auto it = ech.rows().rbegin(); it != ech.rows().rend(); ++it) {
    Combination<Key, Order> v;
    for (const auto& [k, c] : it->second) v.add(k, c);
    out.push_back(std::move(v));
  }
  return out;
}

void sorted_words_rec(std::size_t dim, int len, Letter start, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t l = start; l < dim; ++l) {
    cur.push_back(static_cast<Letter>(l));
    sorted_words_rec(dim, len, static_cast<Letter>(l), cur, out);
    cur.pop_back();
  }
}

void monomials_rec(std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = static_cast<std::uint8_t>(left);
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[i] = static_cast<std::uint8_t>(e);
    monomials_rec(i + 1, left - e, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Word> sorted_words(std::size_t dim, int max_degree) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d) {
    Word cur;
    sorted_words_rec(dim, d, 0, cur, out);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t dim, int d) {
  std::vector<Monomial> out;
  if (dim == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  if (d > 255) throw BoundError("exponent exceeds monomial storage", 255);
  Monomial cur(dim, 0);
  monomials_rec(0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t dim, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : monomials_of_degree(dim, d)) out.push_back(std::move(m));
  return out;
}

Word sorted_word(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], static_cast<Letter>(i));
  return w;
}

Monomial exponents(const Word& w, std::size_t dim) {
  Monomial m(dim, 0);
  for (Letter l : w) {
    if (m[l] == 255) throw BoundError("exponent exceeds monomial storage", 255);
    ++m[l];
  }
  return m;
}

Sym sym_multiply(const Sym& a, const Sym& b) {
  Sym out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (int(m[i]) + mb[i] > 255) throw BoundError("exponent exceeds monomial storage", 255);
        m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
      }
      out.add(m, ca * cb);
    }
  return out;
}

Sym sym_truncate(const Sym& a, int max_degree) {
  Sym out = a;
  out.erase_if([&](const Monomial& m, const Rational&) { return degree(m) > max_degree; });
  return out;
}

Sym sym_homogeneous(const Sym& a, int d) {
  Sym out = a;
  out.erase_if([&](const Monomial& m, const Rational&) { return degree(m) != d; });
  return out;
}

int sym_degree(const Sym& a) {
  if (a.is_zero()) return -1;
  return degree(std::prev(a.end())->first);
}

Sym sym_variable(std::size_t dim, std::size_t i) {
  Monomial m(dim, 0);
  m[i] = 1;
  return Sym(m, 1);
}

Sym sym_constant(std::size_t dim, const Rational& c) { return Sym(Monomial(dim, 0), c); }

Enveloping::Enveloping(LieAlgebra a) : algebra_(std::move(a)) {}

const PBW& Enveloping::left_multiply(Letter i, const Word& w) const {
  auto key = std::make_pair(i, w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = leftmul_.find(key); it != leftmul_.end()) return *it->second;
  }
  PBW r;
  if (w.empty() || i <= w.front()) {
    Word v;
    v.reserve(w.size() + 1);
    v.push_back(i);
    v.insert(v.end(), w.begin(), w.end());
    r.add(v, 1);
  } else {
    // x_i w0 w' = w0 (x_i w') + [x_i, w0] w'
    const Letter w0 = w.front();
    const Word rest(w.begin() + 1, w.end());
    const PBW inner = left_multiply(i, rest);
    for (const auto& [v, c] : inner) r.add_scaled(left_multiply(w0, v), c);
    for (const auto& [k, c] : algebra_.bracket(i, w0)) r.add_scaled(left_multiply(k, rest), c);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = leftmul_.try_emplace(std::move(key), std::make_unique<PBW>(std::move(r)));
  return *it->second;
}

PBW Enveloping::left_multiply(Letter i, const PBW& u) const {
  PBW out;
  for (const auto& [w, c] : u) out.add_scaled(left_multiply(i, w), c);
  return out;
}

PBW Enveloping::normalize(const Word& w) const {
  PBW out(Word{}, 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_multiply(*it, out);
  return out;
}

PBW Enveloping::multiply(const PBW& a, const PBW& b) const {
  PBW out;
  for (const auto& [w, c] : a) {
    PBW t = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_multiply(*it, t);
    out.add_scaled(t, c);
  }
  return out;
}

PBW Enveloping::bracket(Letter i, const PBW& u) const {
  PBW xi(Word{i}, 1);
  return left_multiply(i, u) - multiply(u, xi);
}

const PBW& Enveloping::symmetrize(const Monomial& m) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = sym_.find(m); it != sym_.end()) return *it->second;
  }
  PBW r;
  const int d = degree(m);
  if (d <= 1) {
    r.add(sorted_word(m), 1);
  } else {
    // Average over orderings, split by the first letter.
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Monomial rest = m;
      --rest[i];
      r.add_scaled(left_multiply(static_cast<Letter>(i), symmetrize(rest)), ratio(m[i], d));
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = sym_.try_emplace(m, std::make_unique<PBW>(std::move(r)));
  return *it->second;
}

PBW Enveloping::symmetrize(const Sym& s) const {
  PBW out;
  for (const auto& [m, c] : s) out.add_scaled(symmetrize(m), c);
  return out;
}

Sym Enveloping::unsymmetrize(const PBW& u) const {
  Sym out;
  PBW rest = u;
  while (!rest.is_zero()) {
    auto top = std::prev(rest.end());
    const Monomial m = exponents(top->first, dim());
    const Rational c = top->second;
    out.add(m, c);
    rest.add_scaled(symmetrize(m), -c);
  }
  return out;
}

PBWTensor Enveloping::coproduct(const PBW& u) const {
  PBWTensor out;
  for (const auto& [w, c] : u) {
    const std::size_t m = w.size();
    if (m > 24) throw BoundError("coproduct word too long", 24);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      Word l, r;
      for (std::size_t p = 0; p < m; ++p) ((mask >> p) & 1 ? l : r).push_back(w[p]);
      out.add({std::move(l), std::move(r)}, c);
    }
  }
  return out;
}

PBW Enveloping::antipode(const PBW& u) const {
  PBW out;
  for (const auto& [w, c] : u) {
    Word rev(w.rbegin(), w.rend());
    out.add_scaled(normalize(rev), (w.size() % 2) ? -c : c);
  }
  return out;
}

PBWTensor Enveloping::tensor_multiply(const PBWTensor& a, const PBWTensor& b) const {
  PBWTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const PBW l = multiply(PBW(ka.first, 1), PBW(kb.first, 1));
      const PBW r = multiply(PBW(ka.second, 1), PBW(kb.second, 1));
      for (const auto& [wl, cl] : l)
        for (const auto& [wr, cr] : r) out.add({wl, wr}, ca * cb * cl * cr);
    }
  return out;
}

PBW Enveloping::antipode_convolution(const PBWTensor& t) const {
  PBW out;
  for (const auto& [k, c] : t) out.add_scaled(multiply(antipode(PBW(k.first, 1)), PBW(k.second, 1)), c);
  return out;
}

std::vector<PBW> Enveloping::center(int degree) const {
  const auto words = sorted_words(dim(), degree);
  std::map<Word, std::size_t, WordOrder> index;
  for (std::size_t j = 0; j < words.size(); ++j) index.emplace(words[j], j);
  // Rows: coefficient of each output word in [x_i, u], one block per i.
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::map<Word, SparseRow, WordOrder> eqs;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const PBW b = bracket(static_cast<Letter>(i), PBW(words[j], 1));
      for (const auto& [w, c] : b) eqs[w].add(j, c);
    }
    for (auto& [w, r] : eqs) rows.push_back(std::move(r));
  }
  std::vector<PBW> span;
  for (const auto& v : kernel(rows, words.size())) {
    PBW u;
    for (std::size_t j = 0; j < v.size(); ++j) u.add(words[j], v[j]);
    span.push_back(std::move(u));
  }
  return echelon_basis(span);
}

HSym star_pbw(const Enveloping& u, const Sym& f, const Sym& g, int hbar_bound) {
  if (hbar_bound < 0) throw BoundError("negative hbar bound", 0);
  HSym out(hbar_bound + 1);
  const int df = sym_degree(f), dg = sym_degree(g);
  for (int p = 0; p <= df; ++p) {
    const Sym fp = sym_homogeneous(f, p);
    if (fp.is_zero()) continue;
    const PBW sf = u.symmetrize(fp);
    for (int q = 0; q <= dg; ++q) {
      const Sym gq = sym_homogeneous(g, q);
      if (gq.is_zero()) continue;
      const Sym prod = u.unsymmetrize(u.multiply(sf, u.symmetrize(gq)));
      // A contraction of k brackets drops the degree by k and carries ħ^k.
      for (const auto& [m, c] : prod) {
        const int k = p + q - degree(m);
        if (k <= hbar_bound) out[k].add(m, c);
      }
    }
  }
  return out;
}

Sym star_pbw_at_one(const Enveloping& u, const Sym& f, const Sym& g) {
  return u.unsymmetrize(u.multiply(u.symmetrize(f), u.symmetrize(g)));
}

std::vector<PBW> echelon_basis(const std::vector<PBW>& span) {
  return echelon_generic<Word, WordOrder, TopWordFirst>(span);
}

std::vector<Sym> echelon_basis(const std::vector<Sym>& span) {
  return echelon_generic<Monomial, MonomialOrder, TopMonomialFirst>(span);
}

}  // namespace qcenter
