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

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qcenter/combination.hpp"

namespace qcenter {

/// Sparse exact row echelon form over Q. The pivot of a row is its first key
/// under Compare; rows are kept normalized (pivot coefficient 1) and, after
/// reduce_fully(), every pivot column is cleared from all other rows.
template <class Key, class Compare = std::less<Key>>
class Echelon {
 public:
  using Vector = Combination<Key, Compare>;

  /// Reduces v against the current rows, stopping at the first non-pivot
  /// leading key when `leading_only`; otherwise clears every pivot key.
  Vector reduce(Vector v, bool leading_only = false) const {
    Vector out;
    while (!v.is_zero()) {
      auto lead = v.terms().begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) {
        if (leading_only) {
          out += v;
          return out;
        }
        out.add(lead->first, lead->second);
        v.erase(lead->first);
        continue;
      }
      const Rational c = lead->second;
      v.add_scaled(row->second, -c);
    }
    return out;
  }

  /// Inserts v if it is independent of the current rows. Returns true when the rank grew.
  bool insert(const Vector& v) {
    Vector r = reduce(v, true);
    if (r.is_zero()) return false;
    const Key pivot = r.terms().begin()->first;
    const Rational inv = 1 / Rational(r.terms().begin()->second);
    r *= inv;
    rows_.emplace(pivot, std::move(r));
    reduced_ = false;
    return true;
  }

  /// Back-substitutes so that the form is fully reduced.
  void reduce_fully() {
    if (reduced_) return;
    // Later pivots are larger; process from the last so each row only
    // sees already-reduced rows below it.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Vector tail = it->second;
      tail.erase(it->first);
      Vector red = reduce(tail);
      red.add(it->first, 1);
      it->second = std::move(red);
    }
    reduced_ = true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  const std::map<Key, Vector, Compare>& rows() const { return rows_; }

 private:
  std::map<Key, Vector, Compare> rows_;
  bool reduced_ = true;
};

/// Dense-index sparse matrix for kernels and affine solves: each equation is
/// a combination over unknown indices 0..unknowns-1.
using SparseRow = Combination<std::size_t>;

/// Basis of {x : row·x = 0 for all rows}. Each basis vector has a distinct
/// free coordinate set to 1; free coordinates are the non-pivot indices, and
/// pivots are chosen as the smallest index in each row. Returned in
/// increasing order of their free coordinate.
std::vector<std::vector<Rational>> kernel(const std::vector<SparseRow>& rows, std::size_t unknowns);

struct AffineSolution {
  bool consistent = false;
  std::vector<Rational> particular;              // free coordinates zero
  std::vector<std::vector<Rational>> nullspace;  // basis of the homogeneous solutions
};

/// Solves row·x = rhs[row] exactly.
AffineSolution solve_affine(const std::vector<SparseRow>& rows, const std::vector<Rational>& rhs,
                            std::size_t unknowns);

std::size_t rank(const std::vector<SparseRow>& rows);

}  // namespace qcenter
