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

#include "qcenter/lie.hpp"

#include <sstream>

namespace qcenter {

struct LieAlgebraBuilder {
  static LieAlgebra algebra(StructureTable t, std::vector<std::string> names) {
    return LieAlgebra(std::move(t), std::move(names));
  }
  static LieBialgebra bialgebra(LieAlgebra a, StructureTable d, LieAlgebra dual) {
    return LieBialgebra(std::move(a), std::move(d), std::move(dual));
  }
};

bool StructureTable::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::none: return "none";
    case Violation::Kind::shape: return "shape";
    case Violation::Kind::antisymmetry: return "antisymmetry";
    case Violation::Kind::jacobi: return "jacobi";
    case Violation::Kind::co_antisymmetry: return "co_antisymmetry";
    case Violation::Kind::co_jacobi: return "co_jacobi";
    case Violation::Kind::cocycle: return "cocycle";
    case Violation::Kind::invariance: return "invariance";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " failure";
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
  }
  if (!residual.empty()) {
    os << " residual [";
    for (std::size_t i = 0; i < residual.size(); ++i) os << (i ? "," : "") << qcenter::to_string(residual[i]);
    os << "]";
  }
  return os.str();
}

LieAlgebra::LieAlgebra(StructureTable table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.dim();
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i));
  sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table_(i, j, k) != 0) sparse_[i * n + j].emplace_back(static_cast<Letter>(k), table_(i, j, k));
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (const auto& [k, c] : bracket(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

std::vector<std::vector<Rational>> LieAlgebra::ad_matrix(std::size_t i) const {
  std::vector<std::vector<Rational>> m(dim(), std::vector<Rational>(dim()));
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m[k][j] = table_(i, j, k);
  return m;
}

namespace {

// Σ_m t(a,b,m) t(m,c,k) for the double bracket [[a,b],c] component k.
Rational nested(const StructureTable& t, std::size_t a, std::size_t b, std::size_t c, std::size_t k) {
  Rational s = 0;
  for (std::size_t m = 0; m < t.dim(); ++m) {
    if (t(a, b, m) == 0) continue;
    s += t(a, b, m) * t(m, c, k);
  }
  return s;
}

// First antisymmetry or Jacobi failure of a table read as a bracket.
Violation check_lie_table(const StructureTable& t, Violation::Kind anti, Violation::Kind jac) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k) + t(j, i, k) != 0)
          return Violation{anti, {i, j, k}, {t(i, j, k) + t(j, i, k)}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        std::vector<Rational> r(n);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
          r[k] = nested(t, i, j, l, k) + nested(t, j, l, i, k) + nested(t, l, i, j, k);
          nonzero = nonzero || r[k] != 0;
        }
        if (nonzero) return Violation{jac, {i, j, l}, std::move(r)};
      }
  return {};
}

}  // namespace

LieValidation validate_lie(const StructureTable& table, std::vector<std::string> names) {
  LieValidation out;
  if (table.dim() == 0 || (!names.empty() && names.size() != table.dim())) {
    out.violation = Violation{Violation::Kind::shape, {table.dim(), names.size()}, {}};
    return out;
  }
  out.violation = check_lie_table(table, Violation::Kind::antisymmetry, Violation::Kind::jacobi);
  if (out.violation.ok()) out.algebra = LieAlgebraBuilder::algebra(table, std::move(names));
  return out;
}

LieAlgebra make_lie_algebra(const StructureTable& table, std::vector<std::string> names) {
  auto v = validate_lie(table, std::move(names));
  if (!v.ok()) throw ValidationError(v.violation);
  return std::move(*v.algebra);
}

LieBialgebra::LieBialgebra(LieAlgebra a, StructureTable d, LieAlgebra dual)
    : algebra_(std::move(a)), cobracket_(std::move(d)), dual_(std::move(dual)) {}

StructureTable cobracket_from_wedges(
    std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& wedges) {
  StructureTable d(dim);
  for (const auto& [i, j, k, w] : wedges) {
    if (i >= dim || j >= dim || k >= dim) throw InputError("cobracket index out of range");
    d.at(i, j, k) += w;
    d.at(i, k, j) -= w;
  }
  return d;
}

BialgebraValidation validate_bialgebra(const LieAlgebra& a, const StructureTable& d) {
  BialgebraValidation out;
  const std::size_t n = a.dim();
  if (d.dim() != n) {
    out.violation = Violation{Violation::Kind::shape, {n, d.dim()}, {}};
    return out;
  }
  // Dual bracket [x^j, x^k] = Σ_i D(i,j,k) x^i as a table on g*.
  StructureTable dual(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) dual.at(j, k, i) = d(i, j, k);
  Violation v = check_lie_table(dual, Violation::Kind::co_antisymmetry, Violation::Kind::co_jacobi);
  if (!v.ok()) {
    // Report co-antisymmetry in cobracket coordinates (i; j, k).
    if (v.kind == Violation::Kind::co_antisymmetry) v.indices = {v.indices[2], v.indices[0], v.indices[1]};
    out.violation = std::move(v);
    return out;
  }

  // Cocycle: δ([x_a,x_b]) = [x_a⊗1+1⊗x_a, δ(x_b)] − [x_b⊗1+1⊗x_b, δ(x_a)].
  auto ad_delta = [&](std::size_t a_idx, std::size_t b_idx, std::vector<Rational>& r, int sign) {
    // [x_a ⊗ 1 + 1 ⊗ x_a, Σ D(b,j,k) x_j⊗x_k]
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = d(b_idx, j, k);
        if (c == 0) continue;
        for (const auto& [m, s] : a.bracket(a_idx, j)) r[m * n + k] += sign * c * s;
        for (const auto& [m, s] : a.bracket(a_idx, k)) r[j * n + m] += sign * c * s;
      }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> r(n * n);
      for (const auto& [m, c] : a.bracket(i, j))
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) r[p * n + q] += c * d(m, p, q);
      ad_delta(i, j, r, -1);
      ad_delta(j, i, r, +1);
      for (const auto& q : r)
        if (q != 0) {
          out.violation = Violation{Violation::Kind::cocycle, {i, j}, std::move(r)};
          return out;
        }
    }
  std::vector<std::string> dual_names;
  for (const auto& s : a.basis_names())
    dual_names.push_back(!s.empty() && s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
  out.bialgebra = LieAlgebraBuilder::bialgebra(a, d, LieAlgebraBuilder::algebra(std::move(dual), dual_names));
  return out;
}

LieBialgebra make_bialgebra(const LieAlgebra& a, const StructureTable& cobracket) {
  auto v = validate_bialgebra(a, cobracket);
  if (!v.ok()) throw ValidationError(v.violation);
  return std::move(*v.bialgebra);
}

DoubleAlgebra::DoubleAlgebra(LieBialgebra b, LieAlgebra d) : bialgebra_(std::move(b)), double_(std::move(d)) {
  t_ = canonical_t(*this);
}

Rational DoubleAlgebra::pairing(std::size_t a, std::size_t b) const {
  const std::size_t n = half_dim();
  if (a < n && b == a + n) return 1;
  if (b < n && a == b + n) return 1;
  return 0;
}

DoubleAlgebra drinfeld_double(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const StructureTable& c = b.algebra().table();
  const StructureTable& D = b.cobracket();
  StructureTable t(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        t.at(i, j, k) = c(i, j, k);
        t.at(n + j, n + k, n + i) = D(i, j, k);
        // [x_i, x^j] = Σ_k D(i,j,k) x_k + Σ_k c(k,i,j) x^k
        t.at(i, n + j, k) += D(i, j, k);
        t.at(i, n + j, n + k) += c(k, i, j);
        t.at(n + j, i, k) -= D(i, j, k);
        t.at(n + j, i, n + k) -= c(k, i, j);
      }
  std::vector<std::string> names = b.algebra().basis_names();
  for (const auto& s : b.dual().basis_names()) names.push_back(s);
  auto v = validate_lie(t, names);
  if (!v.ok()) throw InternalError("double bracket is not a Lie bracket: " + v.violation.describe());
  DoubleAlgebra d(b, std::move(*v.algebra));
  Violation inv = check_pairing_invariance(d);
  if (!inv.ok()) throw InternalError("double pairing is not invariant: " + inv.describe());
  return d;
}

Violation check_pairing_invariance(const DoubleAlgebra& d) {
  const std::size_t m = d.dim();
  const auto& L = d.algebra();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Rational r = 0;
        for (const auto& [k, s] : L.bracket(a, b)) r += s * d.pairing(k, c);
        for (const auto& [k, s] : L.bracket(a, c)) r += s * d.pairing(b, k);
        if (r != 0) return Violation{Violation::Kind::invariance, {a, b, c}, {r}};
      }
  return {};
}

TwoTensor canonical_t(const DoubleAlgebra& d) {
  const std::size_t n = d.half_dim();
  TwoTensor t;
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back({static_cast<Letter>(i), static_cast<Letter>(n + i), Rational(1)});
    t.push_back({static_cast<Letter>(n + i), static_cast<Letter>(i), Rational(1)});
  }
  return t;
}

Violation check_t_invariance(const DoubleAlgebra& d, const TwoTensor& t) {
  const std::size_t m = d.dim();
  const auto& L = d.algebra();
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<Rational> r(m * m);
    for (const auto& term : t) {
      for (const auto& [k, s] : L.bracket(a, term.left)) r[k * m + term.right] += term.coeff * s;
      for (const auto& [k, s] : L.bracket(a, term.right)) r[term.left * m + k] += term.coeff * s;
    }
    for (const auto& q : r)
      if (q != 0) return Violation{Violation::Kind::invariance, {a}, std::move(r)};
  }
  return {};
}

bool is_symmetric(const TwoTensor& t, std::size_t dim) {
  std::vector<Rational> m(dim * dim);
  for (const auto& term : t) m[term.left * dim + term.right] += term.coeff;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (m[i * dim + j] != m[j * dim + i]) return false;
  return true;
}

StructureTable restrict_table(const StructureTable& t, std::size_t offset, std::size_t n) {
  StructureTable r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r.at(i, j, k) = t(offset + i, offset + j, offset + k);
  return r;
}

}  // namespace qcenter
