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

// Algebra definition files (docs/FORMATS.md). Canonical files survive
// parse → serialize byte for byte.

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qcenter/lie.hpp"

namespace qcenter {

struct Wedge {
  std::size_t of;  // δ(x_of) gets coefficient·x_left∧x_right
  std::size_t left;
  std::size_t right;
  Rational coefficient;
  friend bool operator==(const Wedge&, const Wedge&) = default;
};

struct AlgebraFile {
  std::string name;
  std::string description;  // optional; empty is omitted
  std::vector<std::string> basis;
  StructureTable bracket;       // full table, antisymmetric
  std::vector<Wedge> wedges;    // canonical: left < right, sorted, nonzero
  std::string wedge_convention = "difference";  // x∧y = x⊗y − y⊗x, or "half"
  Rational cobracket_scalar = 1;

  std::size_t dim() const { return basis.size(); }
  bool has_cobracket() const { return !wedges.empty(); }
  /// Full cobracket tensor including scalar and wedge normalization.
  StructureTable cobracket() const;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws InputError with a line/column or field location on malformed input.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);
std::string serialize(const AlgebraFile& f);

/// Canonical file for a bialgebra (δ in "difference" wedges, scalar 1).
AlgebraFile algebra_file(const std::string& name, const LieAlgebra& a, const StructureTable* cobracket = nullptr);

/// The double with its cobracket δ(a) = [a⊗1 + 1⊗a, Σ x_i ⊗ x^i].
StructureTable double_cobracket(const DoubleAlgebra& d);

}  // namespace qcenter
