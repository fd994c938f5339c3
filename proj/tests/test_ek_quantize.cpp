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

#include <memory>
#include <random>

#include "qcenter/associator.hpp"
#include "qcenter/ek.hpp"
#include "qcenter/poisson.hpp"
#include "support.hpp"

namespace {

using namespace qcenter;

constexpr int kHbar = 2;
constexpr int kDegree = 2;

int cap() { return ek_required_cap(EKVerifyOptions{kDegree, kHbar, 1}); }

const AssociatorSolution& associator() {
  static const AssociatorSolution s = solve_associator(2, true, 1);
  return s;
}

struct Setup {
  DoubleAlgebra d;
  EKContext ctx;
  Setup(const std::string& name, Crossing crossing = Crossing::negative)
      : d(qtest::bundled_double(name)), ctx(d, associator(), kHbar, cap(), crossing) {}
};

Setup& setup(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Setup>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Setup>(name);
  return *slot;
}

bool all_pass(const std::vector<CheckRecord>& rs, std::string* why) {
  for (const auto& r : rs)
    if (r.status == Status::fail) {
      *why = r.name + " " + r.witness.dump();
      return false;
    }
  return true;
}

// a ★ b − b ★ a at ħ^k, cut at `target`.
Sym commutator_at(const EKContext& ctx, const Sym& a, const Sym& b, int k, int target) {
  const auto ab = ctx.star(constant_series(a, kHbar, ctx.cap()), constant_series(b, kHbar, ctx.cap()), target);
  const auto ba = ctx.star(constant_series(b, kHbar, ctx.cap()), constant_series(a, kHbar, ctx.cap()), target);
  return sym_truncate(ab[k].terms - ba[k].terms, target);
}

TEST(Shape, ParsePrintAndNavigate) {
  const Shape s = Shape::parse("((PM)(OP))");
  EXPECT_EQ(s.to_string(), "((PM)(OP))");
  EXPECT_EQ(s.leaves(), "PMOP");
  EXPECT_EQ(s.leaf_count(), 4u);
  EXPECT_EQ(s.at("l").to_string(), "(PM)");
  EXPECT_EQ(s.at("rl").kind(), Leaf::functions);
  EXPECT_EQ(s.span("r"), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(s.replace("l", Shape::leaf(Leaf::minus)).to_string(), "(M(OP))");
  EXPECT_EQ(right_comb("PMOP").to_string(), "(P(M(OP)))");
  EXPECT_EQ(Shape::parse("O").leaf_count(), 1u);
  EXPECT_THROW(Shape::parse("((PM)"), InputError);
  EXPECT_THROW(Shape::parse("(PX)"), InputError);
}

TEST(Shape, AllBracketingsAreCatalan) {
  EXPECT_EQ(all_shapes("P").size(), 1u);
  EXPECT_EQ(all_shapes("PM").size(), 1u);
  EXPECT_EQ(all_shapes("PMO").size(), 2u);
  EXPECT_EQ(all_shapes("PMOP").size(), 5u);
  EXPECT_EQ(all_shapes("PMOPM").size(), 14u);
  for (const Shape& s : all_shapes("PMOPM")) EXPECT_EQ(s.leaves(), "PMOPM");
}

class Coherence : public ::testing::TestWithParam<std::string> {};

TEST_P(Coherence, AllPathsAgreeThroughHbarSquared) {
  const EKContext& ctx = setup("sl2-standard").ctx;
  const std::string leaves = GetParam();
  // Left comb start with a generator in each free slot.
  Shape s = Shape::leaf(static_cast<Leaf>(leaves[0]));
  for (std::size_t i = 1; i < leaves.size(); ++i) s = Shape::join(s, Shape::leaf(static_cast<Leaf>(leaves[i])));
  LeafKey key;
  for (std::size_t i = 0; i < leaves.size(); ++i) key.push_back(Word{static_cast<Letter>(i % 3)});
  const CheckRecord r = pentagon_coherence(ctx, ctx.pure(s, key), "coherence");
  EXPECT_EQ(r.status, Status::pass) << r.witness.dump();
}

INSTANTIATE_TEST_SUITE_P(Words, Coherence, ::testing::Values("PMOP", "MPPM", "OPMO", "PPMM", "PMOPM", "MOPOP"));

TEST(CoherenceNegative, NonAssociatorBreaksCoherence) {
  AssociatorSolution bad = associator();
  bad.phi_log.add_term({0}, 1);  // Φ = exp(X + …) violates the pentagon in degree 1
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  const EKContext ctx(d, bad, kHbar, cap());
  const Shape s = Shape::parse("(((PM)O)P)");
  const CheckRecord r = pentagon_coherence(ctx, ctx.pure(s, {Word{0}, Word{1}, Word{2}, Word{0}}), "coherence");
  EXPECT_EQ(r.status, Status::fail);
}

TEST(Vacuum, LiftIsASection) {
  const EKContext& ctx = setup("sl2-standard").ctx;
  for (const Word& p : {Word{}, Word{0}, Word{1, 2}})
    for (const Word& m : {Word{}, Word{2}, Word{0, 1}}) {
      Combination<std::pair<Word, Word>> expected;
      expected.add({p, m}, 1);
      EXPECT_EQ(ctx.vacuum_image(ctx.lift(p, m)), expected);
    }
}

class StarOn : public ::testing::TestWithParam<std::string> {};

TEST_P(StarOn, UnitClassicalLimitAndSemiclassicalBracket) {
  const EKContext& ctx = setup(GetParam()).ctx;
  const std::size_t n = ctx.half_dim();
  const Sym one = sym_constant(n, 1);
  const auto monos = monomials_up_to(n, kDegree);
  for (const auto& ma : monos)
    for (const auto& mb : monos) {
      const Sym a(ma, 1), b(mb, 1);
      const int target = qcenter::degree(ma) + qcenter::degree(mb);
      const auto ab = ctx.star(a, b);
      EXPECT_EQ(sym_truncate(ab[0].terms, target), sym_multiply(a, b));
      const Sym pb = sym_truncate(poisson_bracket(ctx.dressing(), a, b), target);
      EXPECT_EQ(commutator_at(ctx, a, b, 1, target), pb);
      EXPECT_TRUE(commutator_at(ctx, a, b, 0, target).is_zero());
    }
  for (const auto& m : monos) {
    const auto u = ctx.star(one, Sym(m, 1));
    EXPECT_EQ(u[0].terms, Sym(m, 1));
    for (int k = 1; k <= kHbar; ++k) EXPECT_TRUE(u[k].terms.is_zero());
  }
}

TEST_P(StarOn, AssociativeOnRandomTriples) {
  const EKContext& ctx = setup(GetParam()).ctx;
  const std::size_t n = ctx.half_dim();
  std::mt19937 rng(51);
  const int need = 2;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<Truncated>> f;
    for (int i = 0; i < 3; ++i) f.push_back(constant_series(qtest::random_sym(rng, n, 1, 3), kHbar, ctx.cap()));
    const auto l = ctx.star(ctx.star(f[0], f[1], need + kHbar), f[2], need);
    const auto r = ctx.star(f[0], ctx.star(f[1], f[2], need + kHbar), need);
    for (int k = 0; k <= kHbar; ++k) {
      int through = -1;
      EXPECT_TRUE(agree(l[k], r[k], &through)) << "hbar^" << k;
      EXPECT_GE(through, need);
    }
  }
}

TEST_P(StarOn, PoissonCenterIsUndeformedAndCentral) {
  const EKContext& ctx = setup(GetParam()).ctx;
  const std::size_t n = ctx.half_dim();
  // Exact through the cap; keep the elements whose lowest term has degree ≤ kDegree.
  const PoissonCenter pc = poisson_center(ctx.dressing(), ctx.cap());
  std::size_t count = 0;
  for (int d = 0; d <= kDegree; ++d) count += pc.dims[static_cast<std::size_t>(d)];
  const std::vector<Sym> z(pc.basis.begin(), pc.basis.begin() + static_cast<std::ptrdiff_t>(count));
  ASSERT_FALSE(z.empty());
  const int target = kDegree;
  for (const Sym& a : z) {
    const auto za = constant_series(a, kHbar, ctx.cap());
    for (const Sym& b : z) {
      const auto w = ctx.star(za, constant_series(b, kHbar, ctx.cap()), target);
      EXPECT_EQ(sym_truncate(w[0].terms, target), sym_truncate(sym_multiply(a, b), target));
      for (int k = 1; k <= kHbar; ++k) EXPECT_TRUE(sym_truncate(w[k].terms, target).is_zero()) << "hbar^" << k;
    }
    for (const auto& m : monomials_up_to(n, 1))
      for (int k = 0; k <= kHbar; ++k) EXPECT_TRUE(commutator_at(ctx, a, Sym(m, 1), k, target).is_zero());
  }
}

TEST_P(StarOn, VerifySuitePasses) {
  std::string why;
  EXPECT_TRUE(all_pass(ek_verify(setup(GetParam()).ctx, EKVerifyOptions{kDegree, kHbar, 2}), &why)) << why;
}

INSTANTIATE_TEST_SUITE_P(Bialgebras, StarOn,
                         ::testing::Values("sl2-standard", "sl2-kks", "so3-kks", "heisenberg-kks", "nonabelian2-kks",
                                           "abelian1-kks", "sl2"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Crossing, PositiveCrossingFlipsTheSemiclassicalSign) {
  const DoubleAlgebra d = qtest::bundled_double("sl2-standard");
  const EKContext pos(d, associator(), kHbar, cap(), Crossing::positive);
  const EKContext& neg = setup("sl2-standard").ctx;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Sym a = sym_variable(3, i), b = sym_variable(3, j);
      const Sym pb = sym_truncate(poisson_bracket(neg.dressing(), a, b), 2);
      EXPECT_EQ(commutator_at(neg, a, b, 1, 2), pb);
      EXPECT_EQ(commutator_at(pos, a, b, 1, 2), pb * Rational(-1));
    }
}

TEST(Bounds, TargetBeyondCapIsABoundError) {
  const EKContext& ctx = setup("sl2-kks").ctx;
  const auto a = constant_series(sym_variable(3, 0), kHbar, ctx.cap());
  EXPECT_THROW(ctx.star(a, a, ctx.cap()), BoundError);
}

}  // namespace
