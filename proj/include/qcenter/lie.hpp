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

// Finite-dimensional Lie algebras, Lie bialgebras and Drinfeld doubles given
// by structure constants.

#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "qcenter/combination.hpp"
#include "qcenter/error.hpp"

namespace qcenter {

/// Dense rank-3 tensor t[i][j][k] of rationals, dim^3 entries.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }
  bool is_zero() const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// First failing identity found by a validator.
struct Violation {
  enum class Kind { none, shape, antisymmetry, jacobi, co_antisymmetry, co_jacobi, cocycle, invariance };
  Kind kind = Kind::none;
  std::vector<std::size_t> indices;  // basis indices locating the failure
  std::vector<Rational> residual;    // the nonzero residual vector or tensor, flattened

  bool ok() const { return kind == Kind::none; }
  std::string describe() const;
};

std::string to_string(Violation::Kind kind);

class ValidationError : public InputError {
 public:
  explicit ValidationError(Violation v) : InputError(v.describe()), violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Sparse bracket entry [x_i, x_j] = Σ coeff·x_k.
using BracketTerms = std::vector<std::pair<Letter, Rational>>;

class LieAlgebra {
 public:
  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureTable& table() const { return table_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return table_(i, j, k); }
  const BracketTerms& bracket(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }
  bool is_abelian() const { return table_.is_zero(); }

  /// Bracket of coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  /// Matrix of ad_{x_i}: column j holds the coordinates of [x_i, x_j].
  std::vector<std::vector<Rational>> ad_matrix(std::size_t i) const;

 private:
  friend struct LieAlgebraBuilder;
  LieAlgebra(StructureTable table, std::vector<std::string> names);
  StructureTable table_;
  std::vector<std::string> names_;
  std::vector<BracketTerms> sparse_;
};

struct LieValidation {
  std::optional<LieAlgebra> algebra;
  Violation violation;
  bool ok() const { return algebra.has_value(); }
};

/// Checks antisymmetry and the Jacobi identity on every basis triple.
LieValidation validate_lie(const StructureTable& table, std::vector<std::string> names = {});
/// As validate_lie, but throws ValidationError on failure.
LieAlgebra make_lie_algebra(const StructureTable& table, std::vector<std::string> names = {});

/// Cobracket δ given as a full tensor: D(i, j, k) is the coefficient of
/// x_j ⊗ x_k in δ(x_i).
class LieBialgebra {
 public:
  const LieAlgebra& algebra() const { return algebra_; }
  const StructureTable& cobracket() const { return cobracket_; }
  std::size_t dim() const { return algebra_.dim(); }
  /// g* with [x^j, x^k] = Σ_i D(i, j, k) x^i.
  const LieAlgebra& dual() const { return dual_; }

 private:
  friend struct LieAlgebraBuilder;
  LieBialgebra(LieAlgebra a, StructureTable d, LieAlgebra dual);
  LieAlgebra algebra_;
  StructureTable cobracket_;
  LieAlgebra dual_;
};

/// Full cobracket tensor from wedge coefficients, with x∧y = x⊗y − y⊗x:
/// each entry (i, j, k, w) contributes w·x_j∧x_k to δ(x_i).
StructureTable cobracket_from_wedges(std::size_t dim,
                                     const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& wedges);

struct BialgebraValidation {
  std::optional<LieBialgebra> bialgebra;
  Violation violation;
  bool ok() const { return bialgebra.has_value(); }
};

/// Checks co-antisymmetry, co-Jacobi and the 1-cocycle identity
/// δ([a,b]) = a·δ(b) − b·δ(a) exactly.
BialgebraValidation validate_bialgebra(const LieAlgebra& a, const StructureTable& cobracket);
LieBialgebra make_bialgebra(const LieAlgebra& a, const StructureTable& cobracket);

/// Element of V ⊗ V as a list of (left index, right index, coefficient).
struct TensorTerm {
  Letter left;
  Letter right;
  Rational coeff;
};
using TwoTensor = std::vector<TensorTerm>;

/// The double d = g ⊕ g*, basis x_1..x_n then x^1..x^n.
class DoubleAlgebra {
 public:
  const LieAlgebra& algebra() const { return double_; }
  const LieBialgebra& bialgebra() const { return bialgebra_; }
  std::size_t half_dim() const { return bialgebra_.dim(); }
  std::size_t dim() const { return double_.dim(); }
  bool in_g(std::size_t i) const { return i < half_dim(); }
  /// ⟨x_i, x^j⟩ = δ_ij, zero on g×g and g*×g*.
  Rational pairing(std::size_t a, std::size_t b) const;
  /// t = Σ_i x_i ⊗ x^i + x^i ⊗ x_i.
  const TwoTensor& t() const { return t_; }

 private:
  friend DoubleAlgebra drinfeld_double(const LieBialgebra& b);
  DoubleAlgebra(LieBialgebra b, LieAlgebra d);
  LieBialgebra bialgebra_;
  LieAlgebra double_;
  TwoTensor t_;
};

/// Builds the bracket with [x_i, x^j] = Σ_k D(i,j,k) x_k + Σ_k c(k,i,j) x^k,
/// then re-verifies Jacobi and ad-invariance of the pairing (InternalError on failure).
DoubleAlgebra drinfeld_double(const LieBialgebra& b);

/// First basis triple with ⟨[a,b],c⟩ + ⟨b,[a,c]⟩ ≠ 0, if any.
Violation check_pairing_invariance(const DoubleAlgebra& d);

TwoTensor canonical_t(const DoubleAlgebra& d);
/// Residuals of [a⊗1 + 1⊗a, t] for every basis a, as a dim×dim matrix each;
/// the first nonzero one is reported.
Violation check_t_invariance(const DoubleAlgebra& d, const TwoTensor& t);
bool is_symmetric(const TwoTensor& t, std::size_t dim);

/// Sub-block of a table restricted to index range [offset, offset + n).
StructureTable restrict_table(const StructureTable& t, std::size_t offset, std::size_t n);

}  // namespace qcenter
