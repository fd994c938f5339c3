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

// The Duflo element j^{1/2}(x) = det(sinh(ad_x/2)/(ad_x/2))^{1/2} and the
// Duflo map S(a) → U(a).

#include <vector>

#include "qcenter/enveloping.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/report.hpp"

namespace qcenter {

/// Coefficients c_k of u^k in log(sinh(u/2)/(u/2)), k = 0..degree, by exact
/// division of power series.
std::vector<Rational> log_sinhc_coefficients(int degree);

/// Polynomial function of x = Σ x_i e_i (variables x_i), truncated at `degree`.
struct DufloElement {
  Sym series;
  int degree = 0;
};

/// exp(½ Σ_k c_{2k} tr(ad_x^{2k})).
DufloElement duflo_element(const LieAlgebra& a, int degree);
/// det(1 + N)^{1/2} with N = sinh(ad_x/2)/(ad_x/2) − 1, the determinant
/// as a sum of principal minors and the root by the binomial series.
DufloElement duflo_element_via_det(const LieAlgebra& a, int degree);

/// tr(ad_x^k) as a polynomial of degree k.
Sym ad_power_trace(const LieAlgebra& a, int k);

/// symbol(∂) f: each variable of the symbol acts as the matching partial derivative.
Sym apply_symbol(const Sym& symbol, const Sym& f);

/// sym(j^{1/2}(∂) f). Requires deg f ≤ j.degree.
PBW duflo_map(const Enveloping& u, const DufloElement& j, const Sym& f);

struct InvariantSubspace {
  /// sym_basis[d]: basis of the invariants in S^d(a).
  std::vector<std::vector<Sym>> sym_basis;
  /// Basis of Z(U(a)) in filtration degree ≤ degree.
  std::vector<PBW> center_basis;
};

/// Kernel of the adjoint action on each S^d(a), d ≤ degree.
std::vector<Sym> sym_invariants(const LieAlgebra& a, int d);
InvariantSubspace invariants(const Enveloping& u, int degree);

/// Centrality, multiplicativity on invariant pairs, and the comparison with
/// plain symmetrization.
std::vector<CheckRecord> verify_duflo(const Enveloping& u, int degree);

}  // namespace qcenter
