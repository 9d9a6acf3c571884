#include <gtest/gtest.h>

#include <random>

#include "gforest/duality.hpp"
#include "gforest/error.hpp"
#include "gforest/search.hpp"
#include "support.hpp"

using namespace gforest;
using gforest::testing::downset_heyting;
using gforest::testing::load;
using gforest::testing::random_forest;

TEST(Spectrum, FreeOneGivesChainPlusPoint) {
  const GodelAlgebra a = load<GodelAlgebra>("free1.json");
  const Spectrum s = spectrum(a);
  EXPECT_EQ(s.forest.size(), 3);
  EXPECT_EQ(s.forest.order().covers(), (std::vector<Pair>{{0, 2}}));
  EXPECT_EQ(s.forest.names(), (std::vector<std::string>{"x", "¬x", "¬¬x"}));
  EXPECT_EQ(s.generators, (ElemSet{1, 2, 4}));
}

TEST(Spectrum, OrderIsReverseInclusionOfPrimeFilters) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const GodelAlgebra a = downset_heyting(random_forest(rng, 1 + trial % 6).order());
    const Spectrum s = spectrum(a);
    const auto pf = prime_filters(a);
    ASSERT_EQ(static_cast<int>(pf.size()), s.forest.size());
    for (std::size_t i = 0; i < pf.size(); ++i) {
      for (std::size_t j = 0; j < pf.size(); ++j) {
        const bool contains_all = std::includes(pf[i].members.begin(), pf[i].members.end(),
                                                pf[j].members.begin(), pf[j].members.end());
        EXPECT_EQ(s.forest.leq(static_cast<Node>(i), static_cast<Node>(j)), contains_all);
      }
    }
  }
}

TEST(DownsetAlgebra, AgreesWithSetTheoreticHeyting) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Forest f = random_forest(rng, 1 + trial % 6);
    std::vector<NodeSet> sets;
    const GodelAlgebra oracle = downset_heyting(f.order(), &sets);
    const DownsetAlgebra d = downset_algebra(f);
    EXPECT_EQ(d.sets, sets);
    EXPECT_EQ(d.algebra.meet_table(), oracle.meet_table());
    EXPECT_EQ(d.algebra.join_table(), oracle.join_table());
    EXPECT_EQ(d.algebra.impl_table(), oracle.impl_table());
    EXPECT_EQ(d.algebra.bot(), 0);
    EXPECT_EQ(d.algebra.top(), d.algebra.size() - 1);
  }
}

TEST(DownsetAlgebra, IndexOfRejectsNonDownsets) {
  const Forest f = Forest::from_covers(2, {{0, 1}});
  const DownsetAlgebra d = downset_algebra(f);
  EXPECT_EQ(d.index_of(singleton(0)), 1);
  EXPECT_THROW(d.index_of(singleton(1)), PreconditionError);
}

TEST(StoneMap, FreeOne) {
  const GodelAlgebra a = load<GodelAlgebra>("free1.json");
  const auto r = stone_map(a);
  EXPECT_EQ(r[0], 0U);
  EXPECT_EQ(r[1], singleton(0));
  EXPECT_EQ(r[4], from_members({0, 2}));
  EXPECT_EQ(r[5], full_set(3));
  EXPECT_TRUE(stone_failures(a, spectrum(a)).empty());
}

TEST(StoneMap, IsAnIsomorphismOnEveryEnumeratedForest) {
  for (int n = 0; n <= 4; ++n) {
    for (const Forest& f : enum_forests(n)) {
      const GodelAlgebra a = downset_algebra(f).algebra;
      const Spectrum s = spectrum(a);
      EXPECT_TRUE(stone_failures(a, s).empty());
      EXPECT_TRUE(frame_iso(f, {}, s.forest, {}).has_value());
    }
  }
}

TEST(PointMap, SendsNodesToPrincipalDownsets) {
  const Forest f = Forest::from_covers(3, {{0, 2}}, {"f1", "f2", "f3"});
  const DownsetAlgebra d = downset_algebra(f);
  const auto k = point_map(f);
  for (Node x = 0; x < f.size(); ++x) {
    ElemSet expected;
    for (Elem e = 0; e < d.algebra.size(); ++e) {
      if (contains(d.sets[e], x)) expected.push_back(e);
    }
    EXPECT_EQ(k[x], expected);
  }
  const auto nodes = point_map_nodes(f);
  const Spectrum s = spectrum(d.algebra);
  for (Node x = 0; x < f.size(); ++x) {
    EXPECT_EQ(d.sets[s.generators[nodes[x]]], principal_down(f, x));
  }
}

TEST(AlgebraIso, FindsRelabelingsOnly) {
  const Forest a = Forest::from_covers(3, {{0, 2}});
  const Forest b = Forest::from_covers(3, {{1, 0}});
  const Forest c = Forest::from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(algebra_iso(downset_algebra(a).algebra, downset_algebra(b).algebra).has_value());
  EXPECT_FALSE(algebra_iso(downset_algebra(a).algebra, downset_algebra(c).algebra).has_value());
  int count = 0;
  const GodelAlgebra two_points = downset_algebra(Forest::from_covers(2, {})).algebra;
  for_each_algebra_iso(two_points, two_points, [&](const ElemMap&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 2);
}

TEST(FrameIso, RespectsRelations) {
  const Forest f = Forest::from_covers(2, {});
  const Rel r(2, {{0, 0}});
  const Rel s(2, {{1, 1}});
  const auto m = frame_iso(f, {r}, f, {s});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(map_rel(r, *m), s);
  EXPECT_FALSE(frame_iso(f, {r}, f, {Rel(2, {{0, 1}})}).has_value());
}

TEST(Automorphisms, CountForStar) {
  int count = 0;
  for_each_automorphism(Forest::from_covers(4, {{0, 1}, {0, 2}, {0, 3}}), [&](const NodeMap&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 6);
}
