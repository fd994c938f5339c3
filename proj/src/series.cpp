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

#include "qcenter/series.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace qcenter {

NCSeries::NCSeries(std::size_t alphabet_size, int truncation) : alphabet_(alphabet_size), truncation_(truncation) {
  if (truncation < 0) throw InputError("NCSeries: negative truncation degree");
}

NCSeries NCSeries::constant(std::size_t alphabet_size, int truncation, const Rational& c) {
  NCSeries s(alphabet_size, truncation);
  s.add_term(Word{}, c);
  return s;
}

NCSeries NCSeries::generator(std::size_t alphabet_size, int truncation, Letter letter) {
  if (letter >= alphabet_size) throw InputError("NCSeries::generator: letter outside alphabet");
  NCSeries s(alphabet_size, truncation);
  s.add_term(Word{letter}, 1);
  return s;
}

void NCSeries::add_term(const Word& w, const Rational& c) {
  if (degree(w) > truncation_) return;
  terms_.add(w, c);
}

NCSeries NCSeries::homogeneous_part(int d) const {
  NCSeries s(alphabet_, truncation_);
  for (const auto& [w, c] : terms_)
    if (degree(w) == d) s.terms_.add(w, c);
  return s;
}

NCSeries NCSeries::truncated(int truncation) const {
  NCSeries s(alphabet_, truncation);
  for (const auto& [w, c] : terms_) s.add_term(w, c);
  return s;
}

void NCSeries::check_compatible(const NCSeries& o) const {
  if (alphabet_ != o.alphabet_) throw InputError("NCSeries: alphabet mismatch");
  if (truncation_ != o.truncation_) throw InputError("NCSeries: truncation degree mismatch");
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  check_compatible(o);
  terms_ += o.terms_;
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  check_compatible(o);
  terms_ -= o.terms_;
  return *this;
}

NCSeries& NCSeries::operator*=(const Rational& c) {
  terms_ *= c;
  return *this;
}

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
  a.check_compatible(b);
  NCSeries out(a.alphabet_, a.truncation_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      if (degree(u) + degree(v) > a.truncation_) {
        // b is graded-ordered, so every later v is at least as long.
        break;
      }
      Word w;
      w.reserve(u.size() + v.size());
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      out.terms_.add(w, cu * cv);
    }
  }
  return out;
}

bool operator==(const NCSeries& a, const NCSeries& b) {
  return a.alphabet_ == b.alphabet_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

NCSeries nc_multiply(const NCSeries& a, const NCSeries& b) { return a * b; }

NCSeries commutator(const NCSeries& a, const NCSeries& b) { return a * b - b * a; }

NCSeries nc_power(const NCSeries& a, int k) {
  NCSeries r = NCSeries::constant(a.alphabet_size(), a.truncation(), 1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

NCSeries nc_exp(const NCSeries& a) {
  if (a.constant_term() != 0) throw InputError("nc_exp: argument must have zero constant term");
  NCSeries result = NCSeries::constant(a.alphabet_size(), a.truncation(), 1);
  NCSeries term = result;
  for (int k = 1; k <= a.truncation(); ++k) {
    term = term * a;
    term *= ratio(1, static_cast<long>(k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

NCSeries nc_log(const NCSeries& g) {
  if (g.constant_term() != 1) throw InputError("nc_log: argument must have constant term 1");
  NCSeries u = g - NCSeries::constant(g.alphabet_size(), g.truncation(), 1);
  NCSeries result(g.alphabet_size(), g.truncation());
  NCSeries power = u;
  for (int k = 1; k <= g.truncation() && !power.is_zero(); ++k) {
    result += power * ratio(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    power = power * u;
  }
  return result;
}

NCSeries nc_inverse(const NCSeries& g) {
  if (g.constant_term() != 1) throw InputError("nc_inverse: argument must have constant term 1");
  const NCSeries one = NCSeries::constant(g.alphabet_size(), g.truncation(), 1);
  const NCSeries u = one - g;
  NCSeries result = one;
  NCSeries power = one;
  for (int k = 1; k <= g.truncation(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

NCSeries substitute(const NCSeries& s, std::span<const NCSeries> images) {
  if (images.size() < s.alphabet_size()) throw InputError("substitute: missing image");
  if (images.empty()) return NCSeries::constant(0, s.truncation(), s.constant_term());
  for (const auto& im : images) im.check_compatible(images[0]);
  const std::size_t alphabet = images[0].alphabet_size();
  const int trunc = images[0].truncation();

  std::map<Word, NCSeries, WordOrder> prefix;
  prefix.emplace(Word{}, NCSeries::constant(alphabet, trunc, 1));
  NCSeries out(alphabet, trunc);
  for (const auto& [w, c] : s.terms()) {
    // Terms iterate shortest first, so every proper prefix is either cached
    // or built on the way.
    Word p;
    const NCSeries* cur = &prefix.at(Word{});
    for (Letter l : w) {
      p.push_back(l);
      auto it = prefix.find(p);
      if (it == prefix.end()) it = prefix.emplace(p, *cur * images[l]).first;
      cur = &it->second;
    }
    out += *cur * c;
  }
  return out;
}

NCTensor shuffle_coproduct(const NCSeries& s) {
  NCTensor out;
  for (const auto& [w, c] : s.terms()) {
    const std::size_t n = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Word left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(w[i]);
      out.add({left, right}, c);
    }
  }
  return out;
}

// --- Lyndon words ----------------------------------------------------------

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(std::size_t alphabet_size, int max_length) {
  std::vector<Word> out;
  if (alphabet_size == 0 || max_length < 1) return out;
  // Duval's generation in lexicographic order.
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw InputError("standard_factorization: word of length < 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw InternalError("standard_factorization: no Lyndon suffix");
}

namespace {

using Homogeneous = Combination<Word, WordOrder>;

const Homogeneous& bracket_expansion(const Word& w) {
  static std::mutex mutex;
  static std::map<Word, Homogeneous, WordOrder> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(w); it != cache.end()) return it->second;
  }
  Homogeneous r;
  if (w.size() == 1) {
    r.add(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    const Homogeneous pu = bracket_expansion(u);
    const Homogeneous pv = bracket_expansion(v);
    for (const auto& [a, ca] : pu) {
      for (const auto& [b, cb] : pv) {
        Word ab = a, ba = b;
        ab.insert(ab.end(), b.begin(), b.end());
        ba.insert(ba.end(), a.begin(), a.end());
        r.add(ab, ca * cb);
        r.add(ba, -ca * cb);
      }
    }
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(w, std::move(r)).first->second;
}

}  // namespace

NCSeries lyndon_bracket(const Word& w, std::size_t alphabet_size, int truncation) {
  if (!is_lyndon(w)) throw InputError("lyndon_bracket: not a Lyndon word");
  NCSeries s(alphabet_size, truncation);
  if (degree(w) > truncation) return s;
  for (const auto& [u, c] : bracket_expansion(w)) s.add_term(u, c);
  return s;
}

LieSeries::LieSeries(std::size_t alphabet_size, int truncation) : alphabet_(alphabet_size), truncation_(truncation) {}

void LieSeries::add_term(const Word& lyndon, const Rational& c) {
  if (!is_lyndon(lyndon)) throw InputError("LieSeries: basis word is not Lyndon");
  for (Letter l : lyndon)
    if (l >= alphabet_) throw InputError("LieSeries: letter outside alphabet");
  if (degree(lyndon) > truncation_) return;
  terms_.add(lyndon, c);
}

LieSeries LieSeries::homogeneous_part(int d) const {
  LieSeries s(alphabet_, truncation_);
  for (const auto& [w, c] : terms_)
    if (degree(w) == d) s.terms_.add(w, c);
  return s;
}

LieSeries& LieSeries::operator+=(const LieSeries& o) {
  if (alphabet_ != o.alphabet_ || truncation_ != o.truncation_) throw InputError("LieSeries: incompatible operands");
  terms_ += o.terms_;
  return *this;
}

LieSeries& LieSeries::operator-=(const LieSeries& o) {
  if (alphabet_ != o.alphabet_ || truncation_ != o.truncation_) throw InputError("LieSeries: incompatible operands");
  terms_ -= o.terms_;
  return *this;
}

LieSeries& LieSeries::operator*=(const Rational& c) {
  terms_ *= c;
  return *this;
}

NCSeries LieSeries::to_nc() const {
  NCSeries s(alphabet_, truncation_);
  for (const auto& [w, c] : terms_) s += lyndon_bracket(w, alphabet_, truncation_) * c;
  return s;
}

LieSeries LieSeries::from_nc(const NCSeries& s) {
  LieSeries out(s.alphabet_size(), s.truncation());
  if (s.constant_term() != 0) throw InputError("LieSeries::from_nc: nonzero constant term");
  NCSeries rest = s;
  while (!rest.is_zero()) {
    // The smallest word of a Lie polynomial (per degree) is Lyndon, and P(w)
    // has w as its smallest word with coefficient 1.
    const auto& [lead, c] = *rest.terms().terms().begin();
    if (!is_lyndon(lead))
      throw InputError("LieSeries::from_nc: element is not a Lie polynomial");
    const Word w = lead;
    const Rational coeff = c;
    const NCSeries p = lyndon_bracket(w, s.alphabet_size(), s.truncation());
    if (p.terms().terms().begin()->first != w || p.terms().terms().begin()->second != 1)
      throw InternalError("LieSeries::from_nc: unexpected leading word of a Lyndon bracket");
    rest -= p * coeff;
    out.terms_.add(w, coeff);
  }
  return out;
}

LieSeries bch(int degree) {
  if (degree < 1) throw InputError("bch: degree must be positive");
  // Varadarajan's recursion, with K_{2p} = B_{2p}/(2p)!:
  //   (n+1) Z_{n+1} = ½[X−Y, Z_n]
  //       + Σ_{p≥1, 2p≤n} K_{2p} Σ_{k_1+…+k_{2p}=n} [Z_{k_1},[…,[Z_{k_{2p}}, X+Y]…]]
  const NCSeries x = NCSeries::generator(2, degree, 0);
  const NCSeries y = NCSeries::generator(2, degree, 1);
  std::vector<NCSeries> z(degree + 1, NCSeries(2, degree));
  z[1] = x + y;
  for (int n = 1; n < degree; ++n) {
    NCSeries next = commutator(x - y, z[n]) * Rational(1, 2);
    for (int p = 1; 2 * p <= n; ++p) {
      const Rational k2p = bernoulli(2 * p) / factorial(2 * p);
      std::vector<int> parts;
      auto visit = [&](auto& self, int remaining, int slots) -> void {
        if (slots == 0) {
          if (remaining != 0) return;
          NCSeries nested = z[1];
          for (auto it = parts.rbegin(); it != parts.rend(); ++it) nested = commutator(z[*it], nested);
          next += nested * k2p;
          return;
        }
        for (int k = 1; k <= remaining - (slots - 1); ++k) {
          parts.push_back(k);
          self(self, remaining - k, slots - 1);
          parts.pop_back();
        }
      };
      visit(visit, n, 2 * p);
    }
    z[n + 1] = next * ratio(1, static_cast<long>(n + 1));
  }
  NCSeries total(2, degree);
  for (int n = 1; n <= degree; ++n) total += z[n];
  return LieSeries::from_nc(total);
}

}  // namespace qcenter
