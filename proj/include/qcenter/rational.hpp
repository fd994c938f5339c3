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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcenter {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation, but not after the two-argument constructor.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms. Use this rather than Rational(p, q).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
Rational binomial(const Rational& top, unsigned k);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

}  // namespace qcenter
