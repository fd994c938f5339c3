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

// Truncated computations in the Drinfeld category of d-modules: bracketed
// tensor words over M₊, M₋ and O(G), rebracketing by Φ̃, braiding, the
// braided coproduct of the vacuum, and the resulting star product on O(G).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "qcenter/associator.hpp"
#include "qcenter/lie.hpp"
#include "qcenter/poisson.hpp"
#include "qcenter/report.hpp"
#include "qcenter/verma.hpp"

namespace qcenter {

/// Leaf modules: 'P' = M₊, 'M' = M₋, 'O' = O(G).
enum class Leaf : char { plus = 'P', minus = 'M', functions = 'O' };

/// Full binary tree over a sequence of leaves; immutable, shared structure.
class Shape {
 public:
  static Shape leaf(Leaf k);
  static Shape join(const Shape& a, const Shape& b);
  /// Parses "((PM)(PM))"; a bare letter is a single leaf.
  static Shape parse(std::string_view text);

  bool is_leaf() const;
  Leaf kind() const;  // leaves only
  const Shape& left() const;
  const Shape& right() const;
  std::size_t leaf_count() const;
  /// Leaf kinds left to right, e.g. "PMPM".
  std::string leaves() const;
  std::string to_string() const;

  /// Subtree at a path of 'l'/'r' steps from the root.
  const Shape& at(std::string_view path) const;
  /// First leaf index and leaf count of the subtree at `path`.
  std::pair<std::size_t, std::size_t> span(std::string_view path) const;
  /// This tree with the subtree at `path` replaced.
  Shape replace(std::string_view path, const Shape& s) const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.to_string() == b.to_string(); }
  friend bool operator<(const Shape& a, const Shape& b) { return a.to_string() < b.to_string(); }

 private:
  struct Node;
  explicit Shape(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// All full binary trees over the given leaf string, in a fixed order.
std::vector<Shape> all_shapes(std::string_view leaves);
/// Right comb A(B(C(...))).
Shape right_comb(std::string_view leaves);

/// Basis tensor: one basis word per leaf. M₊ and M₋ words are PBW words of
/// U(g*) and U(g) in local indices; an O(G) word is the sorted word of a monomial.
using LeafKey = std::vector<Word>;
using TensorData = Combination<LeafKey>;

struct TensorElement {
  Shape shape = Shape::leaf(Leaf::functions);
  /// Coefficient of ħ^k at index k.
  std::vector<TensorData> data;
};

/// A word in the double as an operator (letters applied right to left).
using DoubleWords = Combination<Word>;

enum class Crossing { negative, positive };

/// Precomputed tables for one double, one associator and one pair of bounds.
/// O(G) factors of the ħ^k coefficient are exact through degree cap − k.
class EKContext {
 public:
  EKContext(const DoubleAlgebra& d, const AssociatorSolution& phi, int hbar_bound, int cap,
            Crossing crossing = Crossing::negative);
  ~EKContext();

  const DoubleAlgebra& double_algebra() const;
  const DressingAction& dressing() const;
  const VermaModule& verma(Leaf side) const;
  int hbar_bound() const { return hbar_; }
  int cap() const { return cap_; }
  Crossing crossing() const { return crossing_; }
  std::size_t half_dim() const;

  /// The pure tensor of basis words at ħ⁰.
  TensorElement pure(const Shape& s, const LeafKey& key, const Rational& c = 1) const;
  /// Action of one double generator on the leaf `leaf`.
  TensorData act_leaf(Letter a, std::size_t leaf, const TensorElement& e, const TensorData& v) const;
  /// t acting on the pair of leaf ranges [a0, a0+na) and [b0, b0+nb).
  TensorData act_t(const TensorElement& e, const TensorData& v, std::pair<std::size_t, std::size_t> a,
                   std::pair<std::size_t, std::size_t> b) const;

  /// One associativity move at the node `path`: (AB)C → A(BC) by Φ̃, or its inverse.
  TensorElement alpha(const TensorElement& e, std::string_view path, bool inverse = false) const;
  /// exp(±ħt/2) on the two children of `path`, then the swap.
  TensorElement braid(const TensorElement& e, std::string_view path, bool inverse = false) const;
  /// Canonical path through the right comb.
  TensorElement rebracket(const TensorElement& e, const Shape& target) const;
  /// Drops the terms whose O(G) factors are beyond their exact degree.
  TensorElement exact_part(const TensorElement& e) const;

  /// Braided coproduct of 1₊⊗1₋ in the shape ((PM)(PM)).
  const TensorElement& vacuum_coproduct() const;

  /// Δ(u)(1₊⊗1₋) ∈ M₊⊗M₋.
  Combination<std::pair<Word, Word>> vacuum_image(const DoubleWords& u) const;
  /// u with Δ(u)(1₊⊗1₋) = p⊗m.
  const DoubleWords& lift(const Word& p, const Word& m) const;

  /// a ★ b through ħ^hbar_bound; each coefficient is cut at degree `target`.
  /// Requires target + hbar_bound ≤ cap (else BoundError).
  std::vector<Truncated> star(const std::vector<Truncated>& a, const std::vector<Truncated>& b, int target) const;
  std::vector<Truncated> star(const Sym& a, const Sym& b) const;

  /// u · f for a combination of double words.
  Truncated act(const DoubleWords& u, const Truncated& f) const;

 private:
  struct Impl;
  int hbar_;
  int cap_;
  Crossing crossing_;
  std::unique_ptr<Impl> impl_;
};

/// Each ħ coefficient of a Sym-valued series, as exact polynomials.
std::vector<Truncated> constant_series(const Sym& s, int hbar_bound, int exact);

/// Pentagon coherence: every shape over `leaves` is reached and every α-edge
/// of the associahedron is checked against the stored value.
CheckRecord pentagon_coherence(const EKContext& ctx, const TensorElement& start, const std::string& name);

struct EKVerifyOptions {
  int degree = 3;  // function degree bound
  int hbar_bound = 2;
  int jobs = 1;
};

/// Semiclassical limit, unit, associativity and the center tests.
std::vector<CheckRecord> ek_verify(const EKContext& ctx, const EKVerifyOptions& opt);

/// Smallest cap ek_verify accepts for the given options.
int ek_required_cap(const EKVerifyOptions& opt);

}  // namespace qcenter
