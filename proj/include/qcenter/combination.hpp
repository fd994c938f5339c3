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

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "qcenter/rational.hpp"

namespace qcenter {

using Letter = std::uint16_t;

/// A word in a finite alphabet: a free monomial, a PBW monomial (when
/// nondecreasing) or a basis vector label of a Verma module.
using Word = std::vector<Letter>;

/// Commutative monomial as an exponent vector of fixed length.
using Monomial = std::vector<std::uint8_t>;

inline int degree(const Word& w) { return static_cast<int>(w.size()); }

inline int degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0, [](int acc, std::uint8_t e) { return acc + e; });
}

/// Graded lexicographic order: by length, then lexicographically.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Graded order on exponent vectors: by total degree, then larger exponents
/// of earlier variables first (x0 > x1 > ...).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

/// Finitely supported rational linear combination of keys. Zero coefficients
/// are never stored.
template <class Key, class Compare = std::less<Key>>
class Combination {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rational, Compare>;

  Combination() = default;
  Combination(const Key& k, const Rational& c) { add(k, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Combination& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  void erase(const Key& k) { terms_.erase(k); }

  template <class Pred>
  void erase_if(Pred pred) {
    std::erase_if(terms_, [&](const auto& kv) { return pred(kv.first, kv.second); });
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  Combination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend Combination operator*(Combination a, const Rational& c) { return a *= c; }
  friend Combination operator*(const Rational& c, Combination a) { return a *= c; }
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace qcenter
