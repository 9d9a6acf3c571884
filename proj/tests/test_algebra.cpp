#include <gtest/gtest.h>

#include <random>

#include "gforest/algebra.hpp"
#include "gforest/error.hpp"
#include "support.hpp"

using namespace gforest;
using gforest::testing::downset_heyting;
using gforest::testing::load;
using gforest::testing::random_forest;

namespace {

// Free algebra on one generator: bot, x, ~x, x|~x, ~~x, top.
enum : Elem { kBot, kX, kNX, kXorNX, kNNX, kTop };

GodelAlgebra free1() { return load<GodelAlgebra>("free1.json"); }

}  // namespace

TEST(GodelAlgebra, RejectsMalformedTables) {
  EXPECT_THROW(GodelAlgebra({}, {}, {}, {}, 0, 0), StructuralError);
  EXPECT_THROW(GodelAlgebra({"a", "b"}, {0, 0, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, 0, 1), StructuralError);
  EXPECT_THROW(GodelAlgebra({"a", "b"}, {0, 0, 0, 2}, {0, 1, 1, 1}, {1, 0, 1, 1}, 0, 1), StructuralError);
  EXPECT_THROW(GodelAlgebra({"a", "b"}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, 0, 5), StructuralError);
}

TEST(GodelAlgebra, FreeOneGeneratorIsValid) {
  const GodelAlgebra a = free1();
  EXPECT_EQ(a.size(), 6);
  EXPECT_EQ(validate_godel(a), std::nullopt);
  EXPECT_EQ(a.neg(kX), kNX);
  EXPECT_EQ(a.neg(kNX), kNNX);
  EXPECT_EQ(a.join(kNX, kNNX), kTop);
  EXPECT_TRUE(a.leq(kX, kNNX));
  EXPECT_FALSE(a.leq(kNX, kNNX));
}

TEST(GodelAlgebra, HeytingButNotGodel) {
  // Downsets of a, b < c form a Heyting algebra where prelinearity fails at
  // the two atoms: ({a} -> {b}) v ({b} -> {a}) = {a,b}.
  const GodelAlgebra v = downset_heyting(Poset::from_covers(3, {{0, 2}, {1, 2}}));
  const auto report = validate_godel(v);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->kind, LawKind::prelinearity);
  EXPECT_EQ(report->witness, (std::vector<Elem>{1, 2}));
}

TEST(GodelAlgebra, ViolationOrderStartsWithLattice) {
  // Swap two meet entries so commutativity breaks.
  const GodelAlgebra a = free1();
  std::vector<Elem> meet = a.meet_table();
  std::swap(meet[kX * 6 + kNX], meet[kX * 6 + kTop]);
  const GodelAlgebra broken(a.names(), meet, a.join_table(), a.impl_table(), a.bot(), a.top());
  const auto report = validate_godel(broken);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->kind, LawKind::lattice);
  EXPECT_FALSE(report->describe().empty());
}

TEST(GodelAlgebra, ResiduationViolation) {
  const GodelAlgebra a = free1();
  std::vector<Elem> impl = a.impl_table();
  impl[kX * 6 + kBot] = kTop;  // x -> bot claimed to be top
  const GodelAlgebra broken(a.names(), a.meet_table(), a.join_table(), impl, a.bot(), a.top());
  const auto report = validate_godel(broken);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->kind, LawKind::residuation);
}

TEST(GodelAlgebra, RandomForestAlgebrasAreGodel) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Forest f = random_forest(rng, 1 + trial % 6);
    EXPECT_EQ(validate_godel(downset_heyting(f.order())), std::nullopt);
  }
}

TEST(JoinIrreducibles, MatchUniqueLowerCover) {
  // In a finite distributive lattice the join-irreducibles are exactly the
  // elements with one lower cover.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const GodelAlgebra a = downset_heyting(random_forest(rng, 1 + trial % 6).order());
    ElemSet expected;
    for (Elem x = 0; x < a.size(); ++x) {
      int lower_covers = 0;
      for (Elem y = 0; y < a.size(); ++y) {
        if (y == x || !a.leq(y, x)) continue;
        bool cover = true;
        for (Elem z = 0; z < a.size(); ++z) {
          if (z != x && z != y && a.leq(y, z) && a.leq(z, x)) cover = false;
        }
        lower_covers += cover;
      }
      if (lower_covers == 1) expected.push_back(x);
    }
    EXPECT_EQ(join_irreducibles(a), expected);
  }
}

TEST(Filters, PrimeFiltersOfFreeOne) {
  const GodelAlgebra a = free1();
  EXPECT_EQ(join_irreducibles(a), (ElemSet{kX, kNX, kNNX}));
  const auto pf = prime_filters(a);
  ASSERT_EQ(pf.size(), 3U);
  EXPECT_EQ(pf[0].members, (ElemSet{kX, kXorNX, kNNX, kTop}));
  EXPECT_EQ(pf[1].members, (ElemSet{kNX, kXorNX, kTop}));
  EXPECT_EQ(pf[2].members, (ElemSet{kNNX, kTop}));
  for (const auto& f : pf) EXPECT_TRUE(is_prime_filter(a, f.members));
}

TEST(Filters, TopAloneIsNotPrime) {
  const GodelAlgebra a = free1();
  EXPECT_TRUE(is_filter(a, {kTop}));
  EXPECT_FALSE(is_prime_filter(a, {kTop}));  // top = ~x v ~~x
  EXPECT_FALSE(is_prime_filter(a, {kBot, kX, kNX, kXorNX, kNNX, kTop}));
  EXPECT_FALSE(is_filter(a, {kX, kNX}));
}

TEST(Filters, IdealsAndCofilters) {
  const GodelAlgebra a = free1();
  EXPECT_TRUE(is_ideal(a, {kBot, kX}));
  EXPECT_FALSE(is_ideal(a, {kX}));
  EXPECT_TRUE(is_cofilter(a, {kX, kXorNX, kNNX, kTop}));
  EXPECT_FALSE(is_cofilter(a, {}));
  EXPECT_EQ(complement(a, {kBot, kX}), (ElemSet{kNX, kXorNX, kNNX, kTop}));
}

TEST(Filters, GeneratedFilter) {
  const GodelAlgebra a = free1();
  EXPECT_EQ(filter_generated(a, {kXorNX, kNNX}), principal_upset(a, kX));
  EXPECT_THROW(filter_generated(a, {}), PreconditionError);
}

TEST(Boolean, FreeOneHasFourBooleanElements) {
  const GodelAlgebra a = free1();
  EXPECT_EQ(boolean_elements(a), (ElemSet{kBot, kNX, kNNX, kTop}));
  EXPECT_EQ(format_elems(a, {kBot, kTop}), "{⊥,⊤}");
}
