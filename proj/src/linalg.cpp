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

#include "qcenter/linalg.hpp"

namespace qcenter {

std::vector<std::vector<Rational>> kernel(const std::vector<SparseRow>& rows, std::size_t unknowns) {
  Echelon<std::size_t> ech;
  for (const auto& r : rows) ech.insert(r);
  ech.reduce_fully();

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (ech.is_pivot(f)) continue;
    std::vector<Rational> v(unknowns);
    v[f] = 1;
    for (const auto& [pivot, row] : ech.rows()) {
      const Rational c = row.coefficient(f);
      if (c != 0) v[pivot] = -c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSolution solve_affine(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                            std::size_t unknowns) {
  // Augmented column sits after every unknown so it is never chosen as a
  // pivot before a real unknown.
  const std::size_t aug = unknowns;
  Echelon<std::size_t> ech;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow r = rows[i];
    r.add(aug, -rhs[i]);
    ech.insert(r);
  }
  ech.reduce_fully();

  AffineSolution sol;
  if (ech.is_pivot(aug)) return sol;
  sol.consistent = true;
  sol.particular.assign(unknowns, Rational(0));
  for (const auto& [pivot, row] : ech.rows()) sol.particular[pivot] = -row.coefficient(aug);

  for (std::size_t f = 0; f < unknowns; ++f) {
    if (ech.is_pivot(f)) continue;
    std::vector<Rational> v(unknowns);
    v[f] = 1;
    for (const auto& [pivot, row] : ech.rows()) {
      const Rational c = row.coefficient(f);
      if (c != 0) v[pivot] = -c;
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  Echelon<std::size_t> ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

}  // namespace qcenter
