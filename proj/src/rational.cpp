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

#include "qcenter/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

#include "qcenter/error.hpp"

namespace qcenter {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return InputError("not a rational number: \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') ++i;
  bool digits = false, slash = false, denom_digits = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? denom_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      throw bad();
    }
  }
  if (!digits || (slash && !denom_digits)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw InputError("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(const Rational& top, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (top - i);
  return r / factorial(k);
}

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational sum = 0;
    for (unsigned k = 0; k < m; ++k) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
      sum += Rational(c) * table[k];
    }
    table.push_back(-sum / (m + 1));
  }
  return table[n];
}

}  // namespace qcenter
