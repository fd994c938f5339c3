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

// U(a) in the PBW basis of nondecreasing words, and S(a) as exponent vectors.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "qcenter/combination.hpp"
#include "qcenter/lie.hpp"

namespace qcenter {

/// Element of U(a): combination of nondecreasing words.
using PBW = Combination<Word, WordOrder>;
/// Element of S(a) (or of a polynomial ring): combination of exponent vectors.
using Sym = Combination<Monomial, MonomialOrder>;
/// Element of U(a) ⊗ U(a).
using PBWTensor = Combination<std::pair<Word, Word>>;

/// Star-product value: coefficient of ħ^k at index k.
using HSym = std::vector<Sym>;

/// All nondecreasing words over `dim` letters of length ≤ max_degree, graded.
std::vector<Word> sorted_words(std::size_t dim, int max_degree);
/// All exponent vectors in `dim` variables of total degree exactly d.
std::vector<Monomial> monomials_of_degree(std::size_t dim, int d);
/// Exponent vectors of total degree ≤ max_degree, in increasing MonomialOrder.
std::vector<Monomial> monomials_up_to(std::size_t dim, int max_degree);

Word sorted_word(const Monomial& m);
Monomial exponents(const Word& w, std::size_t dim);

Sym sym_multiply(const Sym& a, const Sym& b);
Sym sym_truncate(const Sym& a, int max_degree);
Sym sym_homogeneous(const Sym& a, int d);
int sym_degree(const Sym& a);  // -1 for zero
Sym sym_variable(std::size_t dim, std::size_t i);
Sym sym_constant(std::size_t dim, const Rational& c);

class Enveloping {
 public:
  explicit Enveloping(LieAlgebra a);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }

  /// x_i · w for a nondecreasing word w (memoized).
  const PBW& left_multiply(Letter i, const Word& w) const;
  PBW left_multiply(Letter i, const PBW& u) const;
  /// Normal form of an arbitrary word.
  PBW normalize(const Word& w) const;
  PBW multiply(const PBW& a, const PBW& b) const;
  /// [x_i, u].
  PBW bracket(Letter i, const PBW& u) const;

  const PBW& symmetrize(const Monomial& m) const;
  PBW symmetrize(const Sym& s) const;
  /// Exact inverse of symmetrize, by triangular elimination from the top degree.
  Sym unsymmetrize(const PBW& u) const;

  PBWTensor coproduct(const PBW& u) const;
  PBW antipode(const PBW& u) const;
  static Rational counit(const PBW& u) { return u.coefficient(Word{}); }
  PBWTensor tensor_multiply(const PBWTensor& a, const PBWTensor& b) const;
  /// m ∘ (S ⊗ id) applied to a tensor.
  PBW antipode_convolution(const PBWTensor& t) const;

  /// Basis of Z(U(a)) ∩ F_degree U(a), echelonized with pivots on the top word.
  std::vector<PBW> center(int degree) const;

 private:
  LieAlgebra algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Letter, Word>, std::unique_ptr<PBW>> leftmul_;
  mutable std::map<Monomial, std::unique_ptr<PBW>> sym_;
};

/// f ★ g in S(a)[[ħ]] pulled back from U(a_ħ) through symmetrization,
/// truncated at ħ^hbar_bound.
HSym star_pbw(const Enveloping& u, const Sym& f, const Sym& g, int hbar_bound);
/// f ★ g at ħ = 1: unsymmetrize(sym f · sym g).
Sym star_pbw_at_one(const Enveloping& u, const Sym& f, const Sym& g);

/// Echelon basis of a span of PBW elements, pivots on the largest word,
/// fully reduced. Deterministic for a given span.
std::vector<PBW> echelon_basis(const std::vector<PBW>& span);
std::vector<Sym> echelon_basis(const std::vector<Sym>& span);

}  // namespace qcenter
