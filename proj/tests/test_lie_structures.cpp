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

#include <random>

#include "qcenter/algebra_file.hpp"
#include "qcenter/lie.hpp"
#include "support.hpp"

namespace {

using namespace qcenter;
using qtest::bundled_file;

// Jacobi straight from the table: Σ_cyc [x_i, [x_j, x_k]].
bool brute_jacobi(const StructureTable& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational s = 0;
          for (std::size_t l = 0; l < n; ++l)
            s += c(j, k, l) * c(i, l, m) + c(k, i, l) * c(j, l, m) + c(i, j, l) * c(k, l, m);
          if (s != 0) return false;
        }
  return true;
}

// Change of basis x'_a = Σ P[a][b] x_b of a table.
StructureTable transform(const StructureTable& c, const std::vector<std::vector<Rational>>& p,
                         const std::vector<std::vector<Rational>>& pinv) {
  const std::size_t n = c.dim();
  StructureTable out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Rational w = p[a][i] * p[b][j];
          if (w == 0) continue;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t e = 0; e < n; ++e) out.at(a, b, e) += w * c(i, j, k) * pinv[k][e];
        }
  return out;
}

// Unipotent upper triangular P and its inverse by back substitution.
std::pair<std::vector<std::vector<Rational>>, std::vector<std::vector<Rational>>> random_unipotent(std::mt19937& rng,
                                                                                                   std::size_t n) {
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n)), q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    p[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) p[i][j] = qtest::small_rational(rng);
  }
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = n; i-- > 0;) {
      Rational s = i == col ? 1 : 0;
      for (std::size_t j = i + 1; j < n; ++j) s -= p[i][j] * q[j][col];
      q[i][col] = s;
    }
  return {p, q};
}

TEST(Corpus, EveryBundledFileValidates) {
  for (const auto& name : qtest::corpus()) {
    const AlgebraFile f = bundled_file(name);
    const LieValidation lv = validate_lie(f.bracket, f.basis);
    ASSERT_TRUE(lv.ok()) << name << ": " << lv.violation.describe();
    EXPECT_TRUE(brute_jacobi(f.bracket)) << name;
    const BialgebraValidation bv = validate_bialgebra(*lv.algebra, f.cobracket());
    EXPECT_TRUE(bv.ok()) << name << ": " << bv.violation.describe();
  }
}

TEST(Lie, CorruptedJacobiIsLocated) {
  // [x,y] = x, [y,z] = y: the Jacobiator of (x,y,z) is x.
  StructureTable c(3);
  c.at(0, 1, 0) = 1;
  c.at(1, 0, 0) = -1;
  c.at(1, 2, 1) = 1;
  c.at(2, 1, 1) = -1;
  EXPECT_FALSE(brute_jacobi(c));
  const LieValidation v = validate_lie(c, {"x", "y", "z"});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation.kind, Violation::Kind::jacobi);
  std::vector<std::size_t> idx = v.violation.indices;
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_THROW(make_lie_algebra(c), ValidationError);
}

TEST(Lie, AntisymmetryViolation) {
  StructureTable c(2);
  c.at(0, 1, 1) = 1;
  const LieValidation v = validate_lie(c);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation.kind, Violation::Kind::antisymmetry);
}

TEST(LieProperty, RandomBasisChangesStayLie) {
  std::mt19937 rng(21);
  for (const char* name : {"sl2", "so3", "heisenberg", "nonabelian2"}) {
    const AlgebraFile f = bundled_file(name);
    for (int trial = 0; trial < 5; ++trial) {
      auto [p, q] = random_unipotent(rng, f.dim());
      const StructureTable t = transform(f.bracket, p, q);
      EXPECT_TRUE(validate_lie(t).ok()) << name;
      // A single perturbed structure constant: the verdict follows the brute force.
      StructureTable bad = t;
      std::uniform_int_distribution<std::size_t> pick(0, f.dim() - 1);
      const std::size_t i = pick(rng), k = pick(rng);
      const std::size_t j = (i + 1) % f.dim();
      if (i == j) continue;
      bad.at(i, j, k) += 1;
      bad.at(j, i, k) -= 1;
      EXPECT_EQ(validate_lie(bad).ok(), brute_jacobi(bad)) << name;
    }
  }
}

TEST(Bialgebra, StandardSl2PassesAndBrokenCocycleFails) {
  const AlgebraFile f = bundled_file("sl2-standard");
  const LieAlgebra a = make_lie_algebra(f.bracket, f.basis);
  EXPECT_TRUE(validate_bialgebra(a, f.cobracket()).ok());
  // δ(e) = e∧h alone: co-Jacobi holds trivially but the cocycle identity fails.
  const StructureTable half = cobracket_from_wedges(3, {{0, 0, 2, Rational(1)}});
  const BialgebraValidation v = validate_bialgebra(a, half);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation.kind, Violation::Kind::cocycle);
}

TEST(Bialgebra, CoJacobiViolation) {
  // Abelian g, δ dual to the corrupted bracket [x,y] = x, [y,z] = y.
  const LieAlgebra a = make_lie_algebra(StructureTable(3));
  const StructureTable d = cobracket_from_wedges(3, {{0, 0, 1, Rational(1)}, {1, 1, 2, Rational(1)}});
  const BialgebraValidation v = validate_bialgebra(a, d);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violation.kind, Violation::Kind::co_jacobi);
}

TEST(Bialgebra, KksDualRecoversTheBracket) {
  for (const char* name : {"sl2", "so3", "heisenberg", "nonabelian2"}) {
    const LieBialgebra b = qtest::bundled_bialgebra(std::string(name) + "-kks");
    EXPECT_TRUE(b.algebra().is_abelian());
    EXPECT_EQ(b.dual().table(), bundled_file(name).bracket) << name;
  }
}

// ⟨[a,b],c⟩ = ⟨a,[b,c]⟩ on the double, evaluated from the raw table.
bool brute_invariance(const DoubleAlgebra& d) {
  const std::size_t n = d.half_dim(), m = d.dim();
  auto pair = [&](std::size_t a, std::size_t b) -> Rational {
    return (a < n && b == a + n) || (b < n && a == b + n) ? 1 : 0;
  };
  const StructureTable& c = d.algebra().table();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t e = 0; e < m; ++e) {
        Rational l = 0, r = 0;
        for (std::size_t k = 0; k < m; ++k) {
          l += c(a, b, k) * pair(k, e);
          r += pair(a, k) * c(b, e, k);
        }
        if (l != r) return false;
      }
  return true;
}

TEST(Double, PairingAndTInvariantOnTheCorpus) {
  for (const auto& name : qtest::corpus()) {
    const DoubleAlgebra d = qtest::bundled_double(name);
    EXPECT_EQ(d.dim(), 2 * d.half_dim());
    EXPECT_TRUE(validate_lie(d.algebra().table()).ok()) << name;
    EXPECT_TRUE(brute_jacobi(d.algebra().table())) << name;
    EXPECT_TRUE(check_pairing_invariance(d).ok()) << name;
    EXPECT_TRUE(brute_invariance(d)) << name;
    EXPECT_TRUE(is_symmetric(d.t(), d.dim())) << name;
    EXPECT_TRUE(check_t_invariance(d, d.t()).ok()) << name;
    // g and g* sit inside as subalgebras.
    const std::size_t n = d.half_dim();
    EXPECT_EQ(restrict_table(d.algebra().table(), 0, n), d.bialgebra().algebra().table()) << name;
    EXPECT_EQ(restrict_table(d.algebra().table(), n, n), d.bialgebra().dual().table()) << name;
  }
}

TEST(Double, PairingValues) {
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ(d.pairing(a, b), (a + 3 == b || b + 3 == a) ? 1 : 0);
  EXPECT_EQ(d.t().size(), 6u);
}

TEST(Double, TrivialCobracketOnAbelianGivesAbelianDouble) {
  for (const char* name : {"abelian1", "abelian2"}) {
    const DoubleAlgebra d = qtest::bundled_double(name);
    EXPECT_TRUE(d.algebra().is_abelian());
    EXPECT_EQ(d.dim(), 2 * bundled_file(name).dim());
  }
}

TEST(Double, BrokenTFailsInvariance) {
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  TwoTensor t = d.t();
  t[0].coeff = 2;
  EXPECT_FALSE(check_t_invariance(d, t).ok());
}

TEST(Double, CobracketIsABialgebraRestrictingToG) {
  for (const char* name : {"sl2-standard", "sl2-kks", "heisenberg-kks", "so3"}) {
    const DoubleAlgebra d = qtest::bundled_double(name);
    const StructureTable dd = double_cobracket(d);
    EXPECT_TRUE(validate_bialgebra(d.algebra(), dd).ok()) << name;
    const std::size_t n = d.half_dim();
    const StructureTable& dg = d.bialgebra().cobracket();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(dd(i, j, k), dg(i, j, k)) << name;
  }
}

}  // namespace
