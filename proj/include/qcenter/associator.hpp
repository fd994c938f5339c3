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

// Drinfeld–Kohno algebras, rational associators solved degree by degree, and
// their images in U(d)^{⊗3}.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/linalg.hpp"
#include "qcenter/report.hpp"
#include "qcenter/series.hpp"

namespace qcenter {

/// U(t_n) for n = 3 or 4: the free algebra on t_ij (i<j) modulo
/// [t_ij, t_kl] = 0 for disjoint pairs and [t_ij, t_ik + t_jk] = 0.
/// Generators are numbered in lexicographic order of (i, j).
class DKAlgebra {
 public:
  DKAlgebra(int strands, int max_degree);
  ~DKAlgebra();
  DKAlgebra(DKAlgebra&&) noexcept;

  int strands() const { return strands_; }
  int max_degree() const { return max_degree_; }
  std::size_t generator_count() const { return static_cast<std::size_t>(strands_ * (strands_ - 1) / 2); }
  /// Index of t_ij for 1 ≤ i < j ≤ strands (either order accepted).
  Letter generator(int i, int j) const;
  std::string generator_name(Letter g) const;
  NCSeries t(int i, int j) const;
  NCSeries zero() const { return NCSeries(generator_count(), max_degree_); }

  /// Dimension of the degree-d part of the quotient.
  std::size_t dimension(int d) const;
  /// Words not eliminated by the relations in degree d; a basis of the quotient.
  std::vector<Word> normal_words(int d) const;
  /// Normal form: every word rewritten in normal words.
  NCSeries reduce(const NCSeries& s) const;
  bool is_zero(const NCSeries& s) const { return reduce(s).is_zero(); }
  /// The degree-2 relators.
  std::vector<NCSeries> relations() const;

 private:
  struct Impl;
  int strands_;
  int max_degree_;
  std::unique_ptr<Impl> impl_;
};

/// Coefficients of u^k in Π 1/(1 − j u), j = 1..strands−1: the graded
/// dimensions of U(t_n) predicted by its semidirect-product structure.
std::vector<std::size_t> dk_hilbert_series(int strands, int degree);

struct DegreeSolution {
  int degree = 0;
  std::vector<Word> unknowns;  // Lyndon words in X = 0, Y = 1
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
  bool imposed_zero = false;  // odd degree of an even associator
};

struct AssociatorSolution {
  int degree = 0;
  bool even = false;
  int hexagon_sign = 1;
  LieSeries phi_log{2, 1};
  std::vector<DegreeSolution> per_degree;

  /// Φ = exp(phi_log) in K⟨X, Y⟩ truncated at `degree`.
  NCSeries phi() const { return nc_exp(phi_log.to_nc()); }
};

/// Φ(A, B): substitution of the two letters X, Y.
NCSeries associator_at(const NCSeries& phi, const NCSeries& a, const NCSeries& b);

/// Pentagon LHS − RHS in U(t_4), unreduced.
NCSeries pentagon_defect(const NCSeries& phi, const DKAlgebra& dk4);
/// Hexagon LHS − RHS in U(t_3), unreduced; which = 1 or 2.
NCSeries hexagon_defect(const NCSeries& phi, const DKAlgebra& dk3, int which, int sign);

/// Solves pentagon and both hexagons in degrees 1..degree. At each degree the
/// free coordinates of the affine solution set are pinned to zero and the
/// nullspace is recorded. Throws InternalError if a degree is inconsistent.
AssociatorSolution solve_associator(int degree, bool even, int hexagon_sign);

/// Re-substitution checks (pentagon, hexagons, evenness, flip symmetry).
std::vector<CheckRecord> verify_associator(const AssociatorSolution& s);

// --- U(d)^{⊗3} ----------------------------------------------------------

using Tensor3 = Combination<std::array<Word, 3>>;
/// Coefficient of ħ^k at index k.
using HTensor3 = std::vector<Tensor3>;
using HPBW = std::vector<PBW>;

/// Φ̃ with X ↦ ħ t⊗1, Y ↦ ħ 1⊗t, truncated at ħ^hbar_bound.
HTensor3 specialize(const AssociatorSolution& s, const DoubleAlgebra& d, const Enveloping& ud, int hbar_bound);

struct NuElement {
  HPBW nu;
  HPBW sqrt;
};

/// ν = (Σ x_i S(y_i) z_i)^{-1} and its square root with constant term 1.
NuElement nu_element(const HTensor3& phi, const Enveloping& ud, int hbar_bound);

std::vector<CheckRecord> verify_specialization(const HTensor3& phi, const NuElement& nu, const Enveloping& ud,
                                               int hbar_bound);

Json to_json(const AssociatorSolution& s);
AssociatorSolution associator_from_json(const Json& j);

}  // namespace qcenter
