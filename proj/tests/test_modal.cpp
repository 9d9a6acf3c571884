#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gforest/error.hpp"
#include "gforest/frames.hpp"
#include "gforest/modal.hpp"
#include "gforest/search.hpp"
#include "support.hpp"

using namespace gforest;
using gforest::testing::load;
using gforest::testing::random_forest;

namespace {

bool has_witness(const Flag& f, std::vector<Elem> w) {
  return std::find(f.witnesses.begin(), f.witnesses.end(), w) != f.witnesses.end();
}

// Relations defined on raw prime filters:
//   f R_box g  iff  box^-1(f) is inside g
//   f R_dia g  iff  every a in g has dia(a) in f
void raw_relations(const Gao& g, Rel& rbox, Rel& rdia) {
  const auto pf = prime_filters(g.algebra);
  const int n = static_cast<int>(pf.size());
  rbox = Rel(n);
  rdia = Rel(n);
  auto in = [](const ElemSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool box = true, dia = true;
      for (Elem a = 0; a < g.algebra.size(); ++a) {
        if (in(pf[i].members, g.box[a]) && !in(pf[j].members, a)) box = false;
        if (in(pf[j].members, a) && !in(pf[i].members, g.diamond[a])) dia = false;
      }
      if (box) rbox.add(i, j);
      if (dia) rdia.add(i, j);
    }
  }
}

enum : Elem { kBot, kX, kNX, kXorNX, kNNX, kTop };

}  // namespace

TEST(ValidateGao, ReportsFirstBrokenOperatorLaw) {
  Gao g = load<Gao>("fig_dnotfs_gao.json");
  EXPECT_EQ(validate_gao(g), std::nullopt);
  g.box[kTop] = kNNX;
  auto r = validate_gao(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->kind, LawKind::box_top);

  g = load<Gao>("fig_dnotfs_gao.json");
  g.diamond[kBot] = kNX;
  r = validate_gao(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->kind, LawKind::diamond_bottom);

  g = load<Gao>("fig_dnotfs_gao.json");
  g.diamond[kNX] = kBot;  // dia(x v ~x) = ~x but dia(x) v dia(~x) = bot
  r = validate_gao(g);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->kind, LawKind::diamond_join);

  g = load<Gao>("fig_dnotfs_gao.json");
  g.box.pop_back();
  EXPECT_THROW(validate_gao(g), StructuralError);
}

TEST(InducedRelations, MatchRawPrimeFilterDefinitions) {
  long checked = 0;
  enum_gaos(2, Budget{}, [&](const GaoInstance& inst) {
    const InducedRelations ind = induced_relations(inst.gao);
    Rel rbox, rdia;
    raw_relations(inst.gao, rbox, rdia);
    EXPECT_EQ(ind.rbox, rbox);
    EXPECT_EQ(ind.rdia, rdia);
    EXPECT_EQ(ind.ra, intersect(rbox, rdia));
    ++checked;
    return true;
  });
  EXPECT_GT(checked, 0);
}

TEST(BetaDelta, MatchPointwiseDefinitions) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Forest f = random_forest(rng, 1 + trial % 5);
    Rel r(f.size());
    for (Node y = 0; y < f.size(); ++y) {
      const NodeSet row = f.up_closure(static_cast<NodeSet>(rng()) & f.carrier());
      r.set_row(y, row);
    }
    // frame_box = >= o r satisfies M, so beta stays downset-valued.
    Rel frame_box(f.size());
    for (Node y = 0; y < f.size(); ++y) {
      NodeSet u = 0;
      for (Node x = 0; x < f.size(); ++x) {
        if (f.leq(x, y)) u |= r.row(x);
      }
      frame_box.set_row(y, u);
    }
    for (NodeSet a : downsets(f)) {
      NodeSet b = 0, d = 0;
      for (Node y = 0; y < f.size(); ++y) {
        if (subset_of(frame_box.row(y), a)) b |= singleton(y);
      }
      EXPECT_EQ(beta(f, frame_box, a), b);
      for (Node y = 0; y < f.size(); ++y) {
        if (r.row(y) & a) d |= singleton(y);
      }
      // r need not be antitone, so delta may leave the downsets.
      try {
        EXPECT_EQ(delta(f, r, a), d);
        EXPECT_TRUE(f.is_downset(d));
      } catch (const PreconditionError&) {
        EXPECT_FALSE(f.is_downset(d));
      }
    }
  }
}

TEST(BetaDelta, NonDownsetOutputNamesTheNode) {
  const Forest f = Forest::from_covers(2, {{0, 1}}, {"lo", "hi"});
  const Rel r(2, {{0, 1}});  // lo sees hi, hi sees nothing
  try {
    beta(f, r, 0);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("lo"), std::string::npos);
  }
}

TEST(Classify, DunnButNotFischerServi) {
  const Gao g = load<Gao>("fig_dnotfs_gao.json");
  const VarietyFlags v = classify(g);
  EXPECT_TRUE(v.gao.holds);
  EXPECT_TRUE(v.d1.holds);
  EXPECT_TRUE(v.d2.holds);
  EXPECT_TRUE(v.fs1.holds);
  EXPECT_FALSE(v.fs2.holds);
  ASSERT_FALSE(v.fs2.witnesses.empty());
  EXPECT_EQ(v.fs2.witnesses.front(), (std::vector<Elem>{kX, kBot}));
  // dia x -> box bot = bot -> ~~x = top, box(x -> bot) = box ~x = ~~x.
  const GodelAlgebra& a = g.algebra;
  EXPECT_EQ(a.impl(g.diamond[kX], g.box[kBot]), kTop);
  EXPECT_EQ(g.box[a.impl(kX, kBot)], kNNX);
  EXPECT_TRUE(v.dgao.holds);
  EXPECT_TRUE(v.wgao.holds);
  EXPECT_FALSE(v.fsgao.holds);
}

TEST(Classify, FischerServiButNotDunn) {
  const Gao g = load<Gao>("fig_fsnotd_gao.json");
  const VarietyFlags v = classify(g);
  const Elem a = 1, d = 4;
  EXPECT_TRUE(v.fs1.holds);
  EXPECT_TRUE(v.fs2.holds);
  EXPECT_FALSE(v.d1.holds);
  EXPECT_TRUE(has_witness(v.d1, {a, d}));
  const GodelAlgebra& A = g.algebra;
  EXPECT_FALSE(A.leq(g.box[A.join(a, d)], A.join(g.box[a], g.diamond[d])));
  EXPECT_TRUE(v.fsgao.holds);
  EXPECT_FALSE(v.dgao.holds);
}

TEST(Classify, FlagsMatchDirectAxiomEvaluation) {
  enum_gaos(2, Budget{}, [&](const GaoInstance& inst) {
    const Gao& g = inst.gao;
    const GodelAlgebra& A = g.algebra;
    bool d1 = true, d2 = true, fs1 = true, fs2 = true;
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        d1 &= A.leq(g.box[A.join(x, y)], A.join(g.box[x], g.diamond[y]));
        d2 &= A.leq(A.meet(g.box[x], g.diamond[y]), g.diamond[A.meet(x, y)]);
        fs1 &= A.leq(g.diamond[A.impl(x, y)], A.impl(g.box[x], g.diamond[y]));
        fs2 &= A.leq(A.impl(g.diamond[x], g.box[y]), g.box[A.impl(x, y)]);
      }
    }
    const VarietyFlags v = classify(g);
    EXPECT_EQ(v.d1.holds, d1);
    EXPECT_EQ(v.d2.holds, d2);
    EXPECT_EQ(v.fs1.holds, fs1);
    EXPECT_EQ(v.fs2.holds, fs2);
    EXPECT_EQ(v.dgao.holds, d1 && d2);
    EXPECT_EQ(v.fsgao.holds, fs1 && fs2);
    return true;
  });
}

TEST(Classify, BooleanAlgebrasWithDualOperators) {
  for (const char* name : {"bao_two_identity_gao.json", "bao_four_swap_gao.json"}) {
    const VarietyFlags v = classify(load<Gao>(name));
    for (const auto& [flag, f] : v.entries()) EXPECT_TRUE(f->holds) << name << " " << flag;
  }
}

TEST(Classify, ChainSeparatingBooleanFromWeak) {
  const VarietyFlags v = classify(load<Gao>("prop_final_v_chain_gao.json"));
  EXPECT_TRUE(v.wgao.holds);
  EXPECT_TRUE(v.fsgao.holds);
  EXPECT_FALSE(v.bao.holds);
}

TEST(Representation, ExamplesAreRepresented) {
  for (const char* name : {"fig_dnotfs_gao.json", "fig_fsnotd_gao.json", "prop_final_v_chain_gao.json"}) {
    const RepresentationReport r = verify_representation(load<Gao>(name));
    EXPECT_TRUE(r.ok()) << name;
  }
  const RepresentationReport dunn = verify_representation(load<Gao>("fig_dnotfs_gao.json"));
  ASSERT_TRUE(dunn.dunn_ok.has_value());
  EXPECT_TRUE(*dunn.dunn_ok);
  EXPECT_FALSE(dunn.fs_ok.has_value());
}

TEST(Representation, ComplexAlgebraOfDualIsIsomorphic) {
  const Gao g = load<Gao>("fig_fsnotd_gao.json");
  const InducedRelations ind = induced_relations(g);
  const ComplexGao cx = complex_algebra(ind.spec.forest, ind.rbox, ind.rdia);
  const auto r = stone_map(g.algebra, ind.spec);
  for (Elem e = 0; e < g.algebra.size(); ++e) {
    EXPECT_EQ(cx.sets[cx.gao.box[std::find(cx.sets.begin(), cx.sets.end(), r[e]) - cx.sets.begin()]],
              r[g.box[e]]);
  }
}

TEST(Preimages, FiltersAndCofilters) {
  const Gao g = load<Gao>("fig_dnotfs_gao.json");
  EXPECT_EQ(preimage_check(g), std::nullopt);
  for (const auto& pf : prime_filters(g.algebra)) {
    EXPECT_TRUE(is_filter(g.algebra, preimage(g.algebra, g.box, pf.members)));
  }
  EXPECT_TRUE(boolean_image_check(g));
}

TEST(Preimages, EmptyDiamondPreimageIsAccepted) {
  Gao g = load<Gao>("bao_two_identity_gao.json");
  g.diamond = {0, 0};
  EXPECT_EQ(validate_gao(g), std::nullopt);
  EXPECT_EQ(preimage_check(g), std::nullopt);
}
