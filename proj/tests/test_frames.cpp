#include <gtest/gtest.h>

#include <random>

#include "gforest/error.hpp"
#include "gforest/frames.hpp"
#include "support.hpp"

using namespace gforest;
using gforest::testing::load;
using gforest::testing::naive_compose;
using gforest::testing::random_forest;
using gforest::testing::random_rel;

namespace {

Rel named(const Forest& f, std::vector<std::pair<std::string, std::string>> pairs) {
  Rel r(f.size());
  for (const auto& [a, b] : pairs) r.add(*f.find(a), *f.find(b));
  return r;
}

bool check(const CheckList& checks, const std::string& name) {
  for (const auto& [n, ok] : checks) {
    if (n == name) return ok;
  }
  ADD_FAILURE() << "no check named " << name;
  return false;
}

}  // namespace

TEST(TwoRelFrames, OrForestExample) {
  const TwoRelFrame fr = load<TwoRelFrame>("ex_or_forest_frame.json");
  const TwoRelFlags flags = classify_two_rel(fr);
  EXPECT_TRUE(flags.forest_frame());
  EXPECT_FALSE(flags.or_frame());
  const TwoRelFrame pt = prime_transform(fr);
  const Forest& f = fr.forest;
  EXPECT_EQ(pt.rbox, named(f, {{"f1", "f1"}, {"f2", "f3"}, {"f2", "f2"}, {"f2", "f1"}, {"f3", "f1"}, {"f3", "f3"}}));
  EXPECT_EQ(pt.rdia, named(f, {{"f1", "f2"}, {"f1", "f3"}, {"f2", "f2"}, {"f2", "f1"}, {"f2", "f3"}, {"f3", "f3"}}));
  EXPECT_TRUE(classify_two_rel(pt).or_frame());
  EXPECT_TRUE(same_operators(f, fr.rbox, fr.rdia, pt.rbox, pt.rdia));
}

TEST(TwoRelFrames, PForestExample) {
  const TwoRelFrame fr = load<TwoRelFrame>("ex_p_forest_frame.json");
  const Forest& f = fr.forest;
  const TwoRelFlags flags = classify_two_rel(fr);
  EXPECT_TRUE(flags.p_frame());
  EXPECT_FALSE(flags.forest_frame());
  EXPECT_EQ(compose(f.geq_rel(), fr.rbox),
            named(f, {{"x", "y"}, {"y", "y"}, {"y", "z"}, {"z", "y"}, {"z", "z"}, {"k", "y"}, {"k", "z"}}));
  EXPECT_EQ(compose(fr.rbox, f.geq_rel()),
            named(f, {{"x", "x"}, {"x", "y"}, {"y", "x"}, {"y", "y"}, {"y", "z"}, {"z", "x"}, {"z", "y"},
                      {"z", "z"}, {"k", "x"}, {"k", "y"}, {"k", "z"}}));
  EXPECT_EQ(compose(f.leq_rel(), fr.rdia), named(f, {{"x", "x"}, {"x", "y"}, {"y", "y"}}));
  EXPECT_THROW(prime_transform(fr), PreconditionError);
  const TwoRelFrame st = second_transform(fr);
  EXPECT_TRUE(classify_two_rel(st).forest_frame());
  EXPECT_TRUE(same_operators(f, fr.rbox, fr.rdia, st.rbox, st.rdia));
  EXPECT_EQ(complex_algebra(f, fr.rbox, fr.rdia).gao, complex_gao(st).gao);
}

TEST(TwoRelFrames, ConditionsMatchCompositionDefinitions) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const Forest f = random_forest(rng, 1 + trial % 5);
    const Rel rb = random_rel(rng, f.size()), rd = random_rel(rng, f.size());
    const Rel& ge = f.geq_rel();
    const Rel& le = f.leq_rel();
    const TwoRelFlags fl = classify_two_rel({f, rb, rd});
    EXPECT_EQ(fl.M.holds, included(naive_compose(ge, rb), rb));
    EXPECT_EQ(fl.A.holds, included(naive_compose(le, rd), rd));
    EXPECT_EQ(fl.OR1.holds, included(naive_compose(naive_compose(ge, rb), ge), rb));
    EXPECT_EQ(fl.OR2.holds, included(naive_compose(naive_compose(le, rd), le), rd));
    EXPECT_EQ(fl.P1.holds, included(naive_compose(ge, rb), naive_compose(rb, ge)));
    EXPECT_EQ(fl.P2.holds, included(naive_compose(le, rd), naive_compose(rd, le)));
    EXPECT_EQ(fl.M.witnesses, difference(naive_compose(ge, rb), rb));
  }
}

TEST(TwoRelFrames, CarrierMismatchIsStructural) {
  const Forest f = Forest::from_covers(2, {});
  EXPECT_THROW(classify_two_rel({f, Rel(3), Rel(2)}), StructuralError);
  EXPECT_THROW(classify_one_rel({f, Rel(1)}), StructuralError);
}

TEST(OneRelFrames, ClassParsing) {
  EXPECT_EQ(parse_one_rel_class("fsd"), OneRelClass::FSD);
  EXPECT_EQ(parse_one_rel_class("Cj"), OneRelClass::CJ);
  EXPECT_EQ(parse_one_rel_class("xx"), std::nullopt);
  EXPECT_EQ(to_string(OneRelClass::W), "W");
}

TEST(OneRelFrames, ConditionsMatchCompositionDefinitions) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Forest f = random_forest(rng, 1 + trial % 5);
    const Rel r = random_rel(rng, f.size(), 0.5);
    const Rel& ge = f.geq_rel();
    const Rel& le = f.leq_rel();
    const OneRelFlags fl = classify_one_rel({f, r});
    EXPECT_EQ(fl.CJ1.holds, included(naive_compose(le, r), naive_compose(r, le)));
    EXPECT_EQ(fl.CJ2.holds, included(naive_compose(ge, r), naive_compose(r, ge)));
    EXPECT_EQ(fl.FS2f.holds, included(naive_compose(r, ge), naive_compose(ge, r)));
    EXPECT_EQ(fl.FSCJ2.holds, naive_compose(r, ge) == naive_compose(ge, r));
    EXPECT_EQ(fl.W1.holds, included(naive_compose(le, r), r));
    EXPECT_EQ(fl.W2.holds, included(naive_compose(ge, r), r));
    EXPECT_EQ(fl.basic.holds, r == intersect(naive_compose(ge, r), naive_compose(le, r)));
    EXPECT_EQ(fl.fsd(), fl.cj() && fl.fs());
  }
}

TEST(OneRelFrames, EmptyAndFullAreW) {
  const Forest f = Forest::from_covers(3, {{0, 1}});
  EXPECT_TRUE(classify_one_rel({f, Rel(3)}).w());
  EXPECT_TRUE(classify_one_rel({f, Rel::full(3)}).w());
}

TEST(OneRelFrames, CjWitnessIsDunnButNotWeak) {
  const OneRelFrame fr = load<OneRelFrame>("prop_final_i_cj_frame.json");
  EXPECT_TRUE(classify_one_rel(fr).cj());
  const OneRelComplex cx = complex_one_rel(fr, OneRelClass::CJ);
  EXPECT_TRUE(all_pass(cx.checks));
  const VarietyFlags v = classify(cx.complex.gao);
  EXPECT_TRUE(v.dgao.holds);
  EXPECT_FALSE(v.wgao.holds);
  const Forest& f = fr.forest;
  const NodeSet xy = from_members({*f.find("x"), *f.find("y")});
  EXPECT_EQ(beta(f, fr.r, xy), xy);
}

TEST(OneRelFrames, FsdWitnessIsFsdButNotWeak) {
  const OneRelFrame fr = load<OneRelFrame>("prop_final_iii_fsd_frame.json");
  EXPECT_TRUE(classify_one_rel(fr).fsd());
  const OneRelComplex cx = complex_one_rel(fr, OneRelClass::FSD);
  const VarietyFlags v = classify(cx.complex.gao);
  EXPECT_TRUE(v.fsdgao.holds);
  EXPECT_FALSE(v.wgao.holds);
  const Forest& f = fr.forest;
  const NodeSet xy = from_members({*f.find("x"), *f.find("y")});
  EXPECT_EQ(beta(f, fr.r, xy), singleton(*f.find("x")));
}

TEST(OneRelFrames, CjTransformOfWitness) {
  const OneRelFrame fr = load<OneRelFrame>("prop_final_i_cj_frame.json");
  const OneRelTransform t = one_rel_transform(fr, OneRelClass::CJ);
  const Rel& ge = fr.forest.geq_rel();
  const Rel& le = fr.forest.leq_rel();
  EXPECT_EQ(t.frame.r, intersect(compose(fr.r, ge), compose(fr.r, le)));
  EXPECT_TRUE(check(t.checks, "R' is CJ"));
  EXPECT_TRUE(check(t.checks, "same beta and delta"));
  const RoundtripReport rt = dual_one_rel_roundtrip(fr, OneRelClass::CJ);
  EXPECT_TRUE(rt.ok);
  EXPECT_EQ(rt.expected, t.frame.r);
}

TEST(OneRelFrames, FsRoundtripRecoversNormalizedRelation) {
  // Two-node chain with R = {(0,0),(0,1),(1,0)} is FS; its complex algebra
  // only sees R' = (>= o R) & (R o <=), which is the full relation here.
  const Forest f = Forest::from_covers(2, {{0, 1}});
  const OneRelFrame fr{f, Rel(2, {{0, 0}, {0, 1}, {1, 0}})};
  ASSERT_TRUE(classify_one_rel(fr).fs());
  const OneRelTransform t = one_rel_transform(fr, OneRelClass::FS);
  EXPECT_EQ(t.frame.r, Rel::full(2));
  EXPECT_TRUE(all_pass(t.checks));
  const RoundtripReport rt = dual_one_rel_roundtrip(fr, OneRelClass::FS);
  EXPECT_FALSE(rt.ok);
  EXPECT_EQ(rt.dual_relation, Rel::full(2));
}

TEST(OneRelFrames, TransformPreconditions) {
  const OneRelFrame fr = load<OneRelFrame>("prop_final_i_cj_frame.json");
  EXPECT_THROW(one_rel_transform(fr, OneRelClass::FS), PreconditionError);
  EXPECT_THROW(one_rel_transform(fr, OneRelClass::W), PreconditionError);
  EXPECT_THROW(complex_one_rel(fr, OneRelClass::basic), PreconditionError);
}

TEST(OneRelFrames, WTransformIsWAndFs) {
  const Forest f = Forest::from_covers(3, {{0, 1}, {0, 2}});
  const OneRelFrame fr{f, Rel::full(3)};
  const OneRelTransform t = w_transform(fr);
  EXPECT_TRUE(all_pass(t.checks));
  EXPECT_EQ(one_rel_box(fr, OneRelClass::FS), compose(f.geq_rel(), fr.r));
  EXPECT_EQ(one_rel_box(fr, OneRelClass::W), fr.r);
}

TEST(FrameAxioms, ExamplesAreConsistent) {
  for (const char* name : {"ex_or_forest_frame.json"}) {
    const FrameAxiomReport r = frame_side_axiom_check(load<TwoRelFrame>(name));
    EXPECT_TRUE(r.consistent()) << name;
  }
  EXPECT_THROW(frame_side_axiom_check(load<TwoRelFrame>("ex_p_forest_frame.json")), PreconditionError);
}
