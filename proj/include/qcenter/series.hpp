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

// Truncated series in free associative and free Lie algebras.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qcenter/combination.hpp"
#include "qcenter/error.hpp"

namespace qcenter {

/// Element of the free associative algebra on `alphabet_size` letters,
/// truncated: words longer than `truncation` are never stored.
class NCSeries {
 public:
  using Terms = Combination<Word, WordOrder>;

  NCSeries(std::size_t alphabet_size, int truncation);

  static NCSeries constant(std::size_t alphabet_size, int truncation, const Rational& c);
  static NCSeries generator(std::size_t alphabet_size, int truncation, Letter letter);

  std::size_t alphabet_size() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Rational coefficient(const Word& w) const { return terms_.coefficient(w); }
  Rational constant_term() const { return terms_.coefficient(Word{}); }

  /// Adds c·w; silently drops words beyond the truncation degree.
  void add_term(const Word& w, const Rational& c);

  NCSeries homogeneous_part(int d) const;
  /// Same element viewed with a lower truncation bound.
  NCSeries truncated(int truncation) const;

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  NCSeries& operator*=(const Rational& c);

  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(NCSeries a, const Rational& c) { return a *= c; }
  friend NCSeries operator*(const Rational& c, NCSeries a) { return a *= c; }
  friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
  friend bool operator==(const NCSeries& a, const NCSeries& b);

  /// Throws InputError unless alphabets and truncation bounds agree.
  void check_compatible(const NCSeries& o) const;

 private:
  std::size_t alphabet_;
  int truncation_;
  Terms terms_;
};

NCSeries nc_multiply(const NCSeries& a, const NCSeries& b);
NCSeries commutator(const NCSeries& a, const NCSeries& b);
/// a^k truncated; a^0 = 1.
NCSeries nc_power(const NCSeries& a, int k);
/// Requires a zero constant term.
NCSeries nc_exp(const NCSeries& a);
/// Requires constant term 1.
NCSeries nc_log(const NCSeries& g);
/// Requires constant term 1.
NCSeries nc_inverse(const NCSeries& g);

/// Substitutes letter i ↦ images[i]; every image must share one alphabet and
/// truncation, which the result inherits.
NCSeries substitute(const NCSeries& s, std::span<const NCSeries> images);

/// Shuffle-dual coproduct with primitive generators: w ↦ Σ_S w_S ⊗ w_{S^c}.
using NCTensor = Combination<std::pair<Word, Word>>;
NCTensor shuffle_coproduct(const NCSeries& s);

// --- Lyndon words ----------------------------------------------------------

bool is_lyndon(const Word& w);
/// All Lyndon words of length 1..max_length, in graded lexicographic order.
std::vector<Word> lyndon_words(std::size_t alphabet_size, int max_length);
/// w = u·v with v the longest proper Lyndon suffix. Requires |w| ≥ 2 Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);
/// The standard bracketing P(w) of a Lyndon word, expanded in the free algebra.
NCSeries lyndon_bracket(const Word& w, std::size_t alphabet_size, int truncation);

/// Free Lie algebra element in the Lyndon basis {P(w)}.
class LieSeries {
 public:
  using Terms = Combination<Word, WordOrder>;

  LieSeries(std::size_t alphabet_size, int truncation);

  std::size_t alphabet_size() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Rational coefficient(const Word& lyndon) const { return terms_.coefficient(lyndon); }

  /// Throws InputError if `lyndon` is not a Lyndon word.
  void add_term(const Word& lyndon, const Rational& c);

  LieSeries homogeneous_part(int d) const;

  LieSeries& operator+=(const LieSeries& o);
  LieSeries& operator-=(const LieSeries& o);
  LieSeries& operator*=(const Rational& c);
  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
  friend bool operator==(const LieSeries& a, const LieSeries& b) {
    return a.alphabet_ == b.alphabet_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

  NCSeries to_nc() const;
  /// Expands a Lie element of the free algebra in the Lyndon basis. Throws
  /// InputError if the element is not a Lie polynomial.
  static LieSeries from_nc(const NCSeries& s);

 private:
  std::size_t alphabet_;
  int truncation_;
  Terms terms_;
};

/// BCH(x, y) with x = letter 0, y = letter 1, through the given degree,
/// computed by a bracket-only recursion (no exponentials).
LieSeries bch(int degree);

/// Replaces letter i by images[i] and each Lyndon bracket by `bracket`.
/// T must be a vector space: T += T, T * Rational.
template <class T, class Bracket>
T evaluate_lie_series(const LieSeries& s, std::span<const T> images, Bracket&& bracket, const T& zero) {
  if (images.size() < s.alphabet_size())
    throw InputError("evaluate_lie_series: missing generator image");
  std::map<Word, T, WordOrder> memo;
  auto eval = [&](auto& self, const Word& w) -> T {
    if (w.size() == 1) return images[w[0]];
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    auto [u, v] = standard_factorization(w);
    T r = bracket(self(self, u), self(self, v));
    memo.emplace(w, r);
    return r;
  };
  T out = zero;
  for (const auto& [w, c] : s.terms()) out += eval(eval, w) * c;
  return out;
}

}  // namespace qcenter
