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

// Formal functions Ŝ(g*) on the group of a Lie bialgebra: coproduct from
// BCH, the dressing action of the double, and the Poisson bracket.
//
// Variables of Ŝ(g*) are the dual basis x^1..x^n, so a Sym over n variables
// is a function on g in exponential coordinates. The pairing with U(g) is
// ⟨ξ^α, sym(x^β)⟩ = α! δ_αβ.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/verma.hpp"

namespace qcenter {

/// Element of Ŝ(g*) known through degree `exact`; nothing above it is stored.
struct Truncated {
  Sym terms;
  int exact = 0;

  static Truncated polynomial(const Sym& s, int cap);
  friend bool operator==(const Truncated&, const Truncated&) = default;
};

Truncated operator*(const Truncated& a, const Truncated& b);
Truncated operator+(const Truncated& a, const Truncated& b);
Truncated operator-(const Truncated& a, const Truncated& b);
Truncated operator*(const Rational& c, const Truncated& a);
/// Whether a and b agree through min(a.exact, b.exact), and that common degree.
bool agree(const Truncated& a, const Truncated& b, int* through = nullptr);

/// ⟨f, m⟩ for f ∈ S(g*) and m ∈ U(g).
Rational pairing(const Enveloping& ug, const Sym& f, const PBW& m);

class DressingAction {
 public:
  /// Tables cover monomials of degree ≤ cap.
  DressingAction(const DoubleAlgebra& d, int cap);

  const DoubleAlgebra& double_algebra() const { return double_; }
  std::size_t half_dim() const { return double_.half_dim(); }
  int cap() const { return cap_; }
  const VermaModule& verma_minus() const { return minus_; }
  const Enveloping& ug() const { return minus_.free_part(); }

  /// field(a)[k] = a·ξ^k, truncated at the cap. The action is by
  /// derivations, so these determine it.
  const std::vector<Sym>& field(Letter a) const;
  /// Whether generator a can lower the degree (it lies in g).
  bool lowers_degree(Letter a) const { return a < half_dim(); }

  Sym act(Letter a, const Sym& f) const;
  Truncated act(Letter a, const Truncated& f) const;
  Truncated act(const Word& u, const Truncated& f) const;  // letters applied right to left

  /// (a·f)(m) = −f(a·m) on all sym(x^β) with |β| ≤ degree, without using
  /// the derivation property.
  Sym act_contragredient(Letter a, const Sym& f, int degree) const;

  /// Linear part of unsymmetrize(u) for u ∈ U(g).
  std::vector<Rational> linear_part(const PBW& u) const;

 private:
  const std::vector<std::pair<Letter, Rational>>& linear_part(const Word& w) const;

  DoubleAlgebra double_;
  int cap_;
  VermaModule minus_;
  std::vector<std::vector<Sym>> fields_;
  mutable std::mutex mutex_;
  mutable std::map<Word, std::unique_ptr<std::vector<std::pair<Letter, Rational>>>, WordOrder> linear_;
};

/// {f,g} = Σ_i (x^i·f)(x_i·g), truncated at the action cap.
Sym poisson_bracket(const DressingAction& act, const Sym& f, const Sym& g);
Truncated poisson_bracket(const DressingAction& act, const Truncated& f, const Truncated& g);

/// π(k, l) = {ξ^k, ξ^l}.
std::vector<std::vector<Sym>> poisson_bivector(const DressingAction& act);

/// Kirillov–Kostant–Souriau bracket on S(a): {x_i, x_j} = Σ_k c(i,j,k) x_k.
Sym kks_bracket(const LieAlgebra& a, const Sym& f, const Sym& g);

struct PoissonCenter {
  int degree = 0;
  /// Echelon basis of {f : deg f ≤ degree, x^i·f = 0 modulo degree > degree},
  /// pivots on the lowest monomial, listed by increasing pivot.
  std::vector<Sym> basis;
  /// dims[d] = number of basis elements whose lowest term has degree d.
  std::vector<std::size_t> dims;
};

PoissonCenter poisson_center(const DressingAction& act, int degree);

/// Coordinates of BCH(x, y) in the basis of g, for x, y given by coordinate
/// vectors over a polynomial ring, truncated at total degree `degree`.
std::vector<Sym> bch_coordinates(const LieAlgebra& g, const std::vector<Sym>& x, const std::vector<Sym>& y,
                                 int degree);
/// f(coords) truncated at `degree`, where coords[k] ∈ K[y_1..y_vars] replaces variable k.
Sym compose(const Sym& f, const std::vector<Sym>& coords, std::size_t vars, int degree);
/// Δ₀(f) ∈ Ŝ(g* ⊕ g*) as a polynomial in 2n variables (first copy first).
Sym bch_coproduct(const Sym& f, const LieAlgebra& g, int degree);
/// Coordinate variables x_k ↦ variable offset + k in a ring of `vars` variables.
std::vector<Sym> coordinate_vector(std::size_t n, std::size_t vars, std::size_t offset);

}  // namespace qcenter
