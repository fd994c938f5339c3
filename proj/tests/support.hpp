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

#pragma once

// Shared fixtures for the test binaries: bundled algebras, random
// generators and brute-force oracles written independently of the library.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qcenter/algebra_file.hpp"
#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/suites.hpp"

namespace qtest {

using namespace qcenter;

inline AlgebraFile bundled_file(const std::string& name) { return read_algebra_file(bundled_path(name + ".json")); }

inline LieAlgebra bundled_lie(const std::string& name) {
  const AlgebraFile f = bundled_file(name);
  return make_lie_algebra(f.bracket, f.basis);
}

inline LieBialgebra bundled_bialgebra(const std::string& name) {
  const AlgebraFile f = bundled_file(name);
  return make_bialgebra(make_lie_algebra(f.bracket, f.basis), f.cobracket());
}

inline DoubleAlgebra bundled_double(const std::string& name) { return drinfeld_double(bundled_bialgebra(name)); }

inline std::vector<std::string> corpus() {
  return {"abelian1",   "abelian1-kks",   "abelian2", "abelian2-kks", "heisenberg", "heisenberg-kks", "nonabelian2",
          "nonabelian2-kks", "sl2", "sl2-kks", "sl2-standard", "so3", "so3-kks"};
}

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return ratio(num(rng), den(rng));
}

/// Random polynomial in `n` variables of degree ≤ d with up to `terms` terms.
inline Sym random_sym(std::mt19937& rng, std::size_t n, int d, int terms) {
  const auto monos = monomials_up_to(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Sym s;
  for (int t = 0; t < terms; ++t) s.add(monos[pick(rng)], small_rational(rng));
  return s;
}

// Commutative polynomials as maps from exponent vectors, independent of Sym.
using Poly = std::map<std::vector<int>, Rational>;

inline Poly to_poly(const Sym& s) {
  Poly p;
  for (const auto& [m, c] : s) p[std::vector<int>(m.begin(), m.end())] += c;
  return p;
}

inline void poly_clean(Poly& p) { std::erase_if(p, [](const auto& kv) { return kv.second == 0; }); }

inline Poly poly_derivative(const Poly& p, std::size_t i) {
  Poly out;
  for (const auto& [key, c] : p)
    if (key[i] > 0) {
      std::vector<int> e = key;
      const Rational k = e[i];
      --e[i];
      out[e] += c * k;
    }
  poly_clean(out);
  return out;
}

inline Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  poly_clean(out);
  return out;
}

/// {f, g} = Σ c_ij^k x_k ∂_i f ∂_j g on S(a), straight from the table.
inline Poly linear_poisson(const StructureTable& c, const Poly& f, const Poly& g) {
  const std::size_t n = c.dim();
  Poly out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly fi = poly_derivative(f, i);
    if (fi.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Poly gj = poly_derivative(g, j);
      if (gj.empty()) continue;
      const Poly prod = poly_multiply(fi, gj);
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) == 0) continue;
        for (const auto& [key, v] : prod) {
          std::vector<int> e = key;
          ++e[k];
          out[e] += v * c(i, j, k);
        }
      }
    }
  }
  poly_clean(out);
  return out;
}

// Brute-force U(a): noncommutative words straightened by repeated
// x_j x_i → x_i x_j + [x_j, x_i] at the first descent.
using Words = std::map<Word, Rational>;

inline void straighten_into(const StructureTable& c, const Word& w, const Rational& coeff, Words& out) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) {
      Word swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      straighten_into(c, swapped, coeff, out);
      for (std::size_t k = 0; k < c.dim(); ++k) {
        const Rational& b = c(w[p], w[p + 1], k);
        if (b == 0) continue;
        Word shorter(w.begin(), w.begin() + p);
        shorter.push_back(static_cast<Letter>(k));
        shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
        straighten_into(c, shorter, coeff * b, out);
      }
      return;
    }
  out[w] += coeff;
}

inline Words straighten(const StructureTable& c, const Words& u) {
  Words out;
  for (const auto& [w, k] : u) straighten_into(c, w, k, out);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Words words_multiply(const StructureTable& c, const Words& a, const Words& b) {
  Words raw;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw[w] += ca * cb;
    }
  return straighten(c, raw);
}

/// Symmetrization by averaging over all orderings of every monomial.
inline Words brute_symmetrize(const StructureTable& c, const Sym& s) {
  Words raw;
  for (const auto& [m, k] : s) {
    Word w;
    for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], static_cast<Letter>(i));
    std::vector<Word> perms;
    do perms.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    // Each distinct ordering occurs prod(m_i!) times among the n! orderings.
    const Rational weight = k / static_cast<long>(perms.size());
    for (const auto& p : perms) raw[p] += weight;
  }
  return straighten(c, raw);
}

inline Words to_words(const PBW& u) {
  Words out;
  for (const auto& [w, k] : u) out[w] += k;
  return out;
}

}  // namespace qtest
