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

#include <gtest/gtest.h>

#include "qcenter/duflo.hpp"
#include "support.hpp"

namespace {

using namespace qcenter;

TEST(Duflo, LogSinhcCoefficients) {
  // log(sinh(x/2)/(x/2)) = x²/24 − x⁴/2880 + x⁶/181440 − …
  const auto c = log_sinhc_coefficients(6);
  ASSERT_GE(c.size(), 7u);
  EXPECT_EQ(c[0], 0);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], Rational(1, 24));
  EXPECT_EQ(c[3], 0);
  EXPECT_EQ(c[4], Rational(-1, 2880));
  EXPECT_EQ(c[6], Rational(1, 181440));
}

TEST(Duflo, Sl2ElementMatchesClosedForm) {
  // On sl2 the eigenvalues of ad are 0, ±λ with λ² = 4(h² + ef) in the
  // coordinates e, f, h; j^{1/2} = sinh(λ/2)/(λ/2) = 1 + λ²/24 + λ⁴/1920 + …
  const LieAlgebra a = qtest::bundled_lie("sl2");
  Sym q;
  q.add(Monomial{1, 1, 0}, 1);
  q.add(Monomial{0, 0, 2}, 1);
  const Sym expected = sym_constant(3, 1) + q * Rational(1, 6) + sym_multiply(q, q) * Rational(1, 120);
  EXPECT_EQ(duflo_element(a, 4).series, expected);
  EXPECT_EQ(duflo_element_via_det(a, 4).series, expected);
}

TEST(Duflo, NilpotentAlgebrasHaveTrivialElement) {
  for (const char* name : {"heisenberg", "abelian2"}) {
    const LieAlgebra a = qtest::bundled_lie(name);
    EXPECT_EQ(duflo_element(a, 4).series, sym_constant(a.dim(), 1)) << name;
  }
}

TEST(Duflo, ElementsAgreeOnEveryLieAlgebra) {
  for (const char* name : {"sl2", "so3", "heisenberg", "nonabelian2"}) {
    const LieAlgebra a = qtest::bundled_lie(name);
    EXPECT_EQ(duflo_element(a, 6).series, duflo_element_via_det(a, 6).series) << name;
  }
}

TEST(Duflo, VerifyPassesThroughDegreeFour) {
  for (const char* name : {"sl2", "so3", "heisenberg", "nonabelian2"}) {
    const Enveloping u(qtest::bundled_lie(name));
    for (const CheckRecord& r : verify_duflo(u, 4))
      EXPECT_NE(r.status, Status::fail) << name << " " << r.name << " " << r.witness.dump();
  }
}

TEST(Duflo, InvariantDimensionsOnSl2) {
  const LieAlgebra a = qtest::bundled_lie("sl2");
  const std::vector<std::size_t> expected{1, 0, 1, 0, 1};
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(sym_invariants(a, d).size(), expected[static_cast<std::size_t>(d)]) << d;
}

TEST(Duflo, MapIsMultiplicativeOnCasimirPowers) {
  const LieAlgebra a = qtest::bundled_lie("sl2");
  const Enveloping u(a);
  const DufloElement j = duflo_element(a, 6);
  const Sym c = sym_invariants(a, 2).at(0);
  const Sym c2 = sym_multiply(c, c);
  EXPECT_EQ(u.multiply(duflo_map(u, j, c), duflo_map(u, j, c)), duflo_map(u, j, c2));
  EXPECT_EQ(u.multiply(duflo_map(u, j, c), duflo_map(u, j, c2)), duflo_map(u, j, sym_multiply(c, c2)));
}

TEST(Duflo, PlainSymmetrizationDefectOnSl2ByBruteForce) {
  // sym(C)·sym(C) − sym(C²) straightened word by word, independently of Enveloping.
  const LieAlgebra a = qtest::bundled_lie("sl2");
  const Enveloping u(a);
  const Sym c = sym_invariants(a, 2).at(0);
  const auto& t = a.table();
  qtest::Words sc = qtest::brute_symmetrize(t, c);
  qtest::Words defect = qtest::words_multiply(t, sc, sc);
  for (const auto& [w, k] : qtest::brute_symmetrize(t, sym_multiply(c, c))) defect[w] -= k;
  std::erase_if(defect, [](const auto& kv) { return kv.second == 0; });
  ASSERT_FALSE(defect.empty());

  const PBW lib = u.multiply(u.symmetrize(c), u.symmetrize(c)) - u.symmetrize(sym_multiply(c, c));
  EXPECT_EQ(qtest::to_words(lib), defect);
  // Frozen from the brute force: the defect is (16/3)·sym(ef + h²/4).
  Sym frozen;
  frozen.add(Monomial{1, 1, 0}, Rational(16, 3));
  frozen.add(Monomial{0, 0, 2}, Rational(4, 3));
  EXPECT_EQ(qtest::brute_symmetrize(t, frozen), defect);
  EXPECT_EQ(u.unsymmetrize(lib), frozen);
}

TEST(Duflo, TruncatedElementRaisesBoundError) {
  const LieAlgebra a = qtest::bundled_lie("sl2");
  const Enveloping u(a);
  const DufloElement j = duflo_element(a, 2);
  EXPECT_THROW(duflo_map(u, j, sym_multiply(sym_invariants(a, 2).at(0), sym_invariants(a, 2).at(0))), BoundError);
}

}  // namespace
