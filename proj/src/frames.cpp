#include "gforest/frames.hpp"

#include <algorithm>
#include <cctype>

#include "gforest/error.hpp"

namespace gforest {

Condition inclusion(const Rel& lhs, const Rel& rhs) {
  Condition c;
  c.witnesses = difference(lhs, rhs);
  c.holds = c.witnesses.empty();
  return c;
}

Condition equality(const Rel& lhs, const Rel& rhs) {
  Condition c;
  c.witnesses = difference(lhs, rhs);
  const auto extra = difference(rhs, lhs);
  c.witnesses.insert(c.witnesses.end(), extra.begin(), extra.end());
  std::sort(c.witnesses.begin(), c.witnesses.end());
  c.holds = c.witnesses.empty();
  return c;
}

std::vector<std::pair<std::string, const Condition*>> TwoRelFlags::entries() const {
  return {{"M", &M}, {"A", &A}, {"OR1", &OR1}, {"OR2", &OR2}, {"P1", &P1}, {"P2", &P2}};
}

std::vector<std::pair<std::string, const Condition*>> OneRelFlags::entries() const {
  return {{"CJ1", &CJ1}, {"CJ2", &CJ2}, {"FS1", &FS1f}, {"FS2", &FS2f},
          {"FSCJ2", &FSCJ2}, {"W1", &W1}, {"W2", &W2}, {"basic", &basic}};
}

std::string to_string(OneRelClass c) {
  switch (c) {
    case OneRelClass::CJ: return "CJ";
    case OneRelClass::FS: return "FS";
    case OneRelClass::FSD: return "FSD";
    case OneRelClass::W: return "W";
    case OneRelClass::basic: return "basic";
  }
  return "?";
}

std::optional<OneRelClass> parse_one_rel_class(const std::string& s) {
  std::string u;
  for (char ch : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "CJ") return OneRelClass::CJ;
  if (u == "FS") return OneRelClass::FS;
  if (u == "FSD") return OneRelClass::FSD;
  if (u == "W") return OneRelClass::W;
  if (u == "BASIC") return OneRelClass::basic;
  return std::nullopt;
}

bool in_class(const OneRelFlags& f, OneRelClass c) {
  switch (c) {
    case OneRelClass::CJ: return f.cj();
    case OneRelClass::FS: return f.fs();
    case OneRelClass::FSD: return f.fsd();
    case OneRelClass::W: return f.w();
    case OneRelClass::basic: return f.basic.holds;
  }
  return false;
}

namespace {

void require_carrier(const Forest& f, const Rel& r, const char* what) {
  if (r.size() != f.size()) {
    throw StructuralError(std::string(what) + " has carrier size " + std::to_string(r.size()) +
                          " but the forest has " + std::to_string(f.size()) + " nodes");
  }
}

std::string pair_text(const Forest& f, const Pair& p) {
  return "(" + f.name(p.first) + "," + f.name(p.second) + ")";
}

}  // namespace

TwoRelFlags classify_two_rel(const TwoRelFrame& fr) {
  require_carrier(fr.forest, fr.rbox, "box relation");
  require_carrier(fr.forest, fr.rdia, "diamond relation");
  const Rel& ge = fr.forest.geq_rel();
  const Rel& le = fr.forest.leq_rel();
  TwoRelFlags f;
  f.M = inclusion(compose(ge, fr.rbox), fr.rbox);
  f.A = inclusion(compose(le, fr.rdia), fr.rdia);
  f.OR1 = inclusion(compose(ge, fr.rbox, ge), fr.rbox);
  f.OR2 = inclusion(compose(le, fr.rdia, le), fr.rdia);
  f.P1 = inclusion(compose(ge, fr.rbox), compose(fr.rbox, ge));
  f.P2 = inclusion(compose(le, fr.rdia), compose(fr.rdia, le));
  return f;
}

OneRelFlags classify_one_rel(const OneRelFrame& fr) {
  require_carrier(fr.forest, fr.r, "relation");
  const Rel& ge = fr.forest.geq_rel();
  const Rel& le = fr.forest.leq_rel();
  const Rel& r = fr.r;
  const Rel ge_r = compose(ge, r);
  const Rel le_r = compose(le, r);
  const Rel r_ge = compose(r, ge);
  const Rel r_le = compose(r, le);
  OneRelFlags f;
  f.CJ1 = inclusion(le_r, r_le);
  f.CJ2 = inclusion(ge_r, r_ge);
  f.FS1f = f.CJ1;
  f.FS2f = inclusion(r_ge, ge_r);
  f.FSCJ2 = equality(r_ge, ge_r);
  f.W1 = inclusion(le_r, r);
  f.W2 = inclusion(ge_r, r);
  f.basic = equality(r, intersect(ge_r, le_r));
  return f;
}

namespace {

void require_forest_frame(const TwoRelFrame& fr) {
  const TwoRelFlags f = classify_two_rel(fr);
  if (!f.M.holds) {
    throw PreconditionError("not a forest frame: condition M fails at " +
                            pair_text(fr.forest, f.M.witnesses.front()));
  }
  if (!f.A.holds) {
    throw PreconditionError("not a forest frame: condition A fails at " +
                            pair_text(fr.forest, f.A.witnesses.front()));
  }
}

void require_class(const OneRelFrame& fr, OneRelClass c) {
  const OneRelFlags f = classify_one_rel(fr);
  if (in_class(f, c)) return;
  for (const auto& [name, cond] : f.entries()) {
    if (cond->holds) continue;
    const bool relevant =
        (c == OneRelClass::CJ && (name == "CJ1" || name == "CJ2")) ||
        (c == OneRelClass::FS && (name == "FS1" || name == "FS2")) ||
        (c == OneRelClass::FSD && (name == "FS1" || name == "FS2" || name == "CJ2")) ||
        (c == OneRelClass::W && (name == "W1" || name == "W2")) ||
        (c == OneRelClass::basic && name == "basic");
    if (relevant) {
      throw PreconditionError("not a " + to_string(c) + " frame: " + name + " fails at " +
                              pair_text(fr.forest, cond->witnesses.front()));
    }
  }
  throw PreconditionError("not a " + to_string(c) + " frame");
}

}  // namespace

TwoRelFrame prime_transform(const TwoRelFrame& fr) {
  require_forest_frame(fr);
  return {fr.forest, compose(fr.rbox, fr.forest.geq_rel()), compose(fr.rdia, fr.forest.leq_rel())};
}

TwoRelFrame second_transform(const TwoRelFrame& fr) {
  const TwoRelFlags f = classify_two_rel(fr);
  if (!f.P1.holds) {
    throw PreconditionError("not a P-frame: condition P1 fails at " +
                            pair_text(fr.forest, f.P1.witnesses.front()));
  }
  if (!f.P2.holds) {
    throw PreconditionError("not a P-frame: condition P2 fails at " +
                            pair_text(fr.forest, f.P2.witnesses.front()));
  }
  return {fr.forest, compose(fr.forest.geq_rel(), fr.rbox), compose(fr.forest.leq_rel(), fr.rdia)};
}

ComplexGao complex_gao(const TwoRelFrame& fr) {
  require_forest_frame(fr);
  return complex_algebra(fr.forest, fr.rbox, fr.rdia);
}

bool same_operators(const Forest& f, const Rel& b1, const Rel& d1, const Rel& b2, const Rel& d2) {
  for (NodeSet a : downsets(f)) {
    if (beta(f, b1, a) != beta(f, b2, a)) return false;
    if (delta(f, d1, a) != delta(f, d2, a)) return false;
  }
  return true;
}

OneRelTransform one_rel_transform(const OneRelFrame& fr, OneRelClass c) {
  if (c == OneRelClass::W || c == OneRelClass::basic) {
    throw PreconditionError("one_rel_transform is defined for CJ, FS and FSD frames");
  }
  require_class(fr, c);
  const Forest& F = fr.forest;
  const Rel& ge = F.geq_rel();
  const Rel& le = F.leq_rel();
  const Rel& r = fr.r;
  OneRelTransform out{fr, {}};
  auto& checks = out.checks;

  if (c == OneRelClass::CJ) {
    const Rel rp = intersect(compose(r, ge), compose(r, le));
    out.frame.r = rp;
    const OneRelFlags f = classify_one_rel(out.frame);
    checks.emplace_back("R' is CJ", f.cj());
    checks.emplace_back("R' o >= = R o >=", compose(rp, ge) == compose(r, ge));
    checks.emplace_back("R' o <= = R o <=", compose(rp, le) == compose(r, le));
    checks.emplace_back("R' satisfies FS2", f.FS2f.holds);
    checks.emplace_back(">= o (R o >=) = R o >=", compose(ge, r, ge) == compose(r, ge));
    checks.emplace_back("<= o (R o <=) = R o <=", compose(le, r, le) == compose(r, le));
    checks.emplace_back("R' = (R' o >=) & (R' o <=)",
                        rp == intersect(compose(rp, ge), compose(rp, le)));
    checks.emplace_back("R contained in R'", included(r, rp));
    checks.emplace_back("same beta and delta", same_operators(F, r, r, rp, rp));
    return out;
  }

  const Rel rp = intersect(compose(ge, r), compose(r, le));
  out.frame.r = rp;
  const OneRelFlags f = classify_one_rel(out.frame);
  checks.emplace_back(c == OneRelClass::FS ? "R' is FS" : "R' is FSD", in_class(f, c));
  checks.emplace_back(">= o R' = >= o R", compose(ge, rp) == compose(ge, r));
  checks.emplace_back("R' o <= = R o <=", compose(rp, le) == compose(r, le));
  checks.emplace_back("R' = (>= o R') & (R' o <=)",
                      rp == intersect(compose(ge, rp), compose(rp, le)));
  if (c == OneRelClass::FSD) {
    checks.emplace_back("R' = (R' o >=) & (R' o <=)",
                        rp == intersect(compose(rp, ge), compose(rp, le)));
    checks.emplace_back("beta over >= o R equals beta over R", same_operators(F, compose(ge, r), r, r, r));
  }
  checks.emplace_back("same beta over >= o R and delta",
                      same_operators(F, compose(ge, r), r, compose(ge, rp), rp));
  return out;
}

OneRelTransform w_transform(const OneRelFrame& fr) {
  require_class(fr, OneRelClass::W);
  OneRelTransform out{fr, {}};
  out.frame.r = compose(fr.r, fr.forest.geq_rel());
  const OneRelFlags f = classify_one_rel(out.frame);
  out.checks.emplace_back("R' is W", f.w());
  out.checks.emplace_back("R' is FS", f.fs());
  return out;
}

Rel one_rel_box(const OneRelFrame& fr, OneRelClass c) {
  return c == OneRelClass::FS ? compose(fr.forest.geq_rel(), fr.r) : fr.r;
}

OneRelComplex complex_one_rel(const OneRelFrame& fr, OneRelClass c) {
  if (c == OneRelClass::basic) {
    throw PreconditionError("complex_one_rel is defined for CJ, FS, FSD and W frames");
  }
  require_class(fr, c);
  OneRelComplex out{complex_algebra(fr.forest, one_rel_box(fr, c), fr.r), {}};
  const VarietyFlags v = classify(out.complex.gao);
  out.checks.emplace_back("GAO", v.gao.holds);
  if (c == OneRelClass::CJ || c == OneRelClass::W || c == OneRelClass::FSD) {
    out.checks.emplace_back("DGAO", v.dgao.holds);
  }
  if (c == OneRelClass::FS || c == OneRelClass::FSD) out.checks.emplace_back("FSGAO", v.fsgao.holds);
  if (c == OneRelClass::W) out.checks.emplace_back("WGAO", v.wgao.holds);
  return out;
}

RoundtripReport dual_one_rel_roundtrip(const OneRelFrame& fr, OneRelClass c) {
  if (c != OneRelClass::CJ && c != OneRelClass::FS && c != OneRelClass::FSD) {
    throw PreconditionError("roundtrip is defined for CJ, FS and FSD frames");
  }
  const OneRelComplex cx = complex_one_rel(fr, c);
  const InducedRelations ind = induced_relations(cx.complex.gao);
  RoundtripReport rep;
  rep.expected = c == OneRelClass::CJ ? one_rel_transform(fr, c).frame.r : fr.r;
  rep.dual_forest = ind.spec.forest;
  rep.dual_relation = ind.ra;
  const OneRelFlags dual_flags = classify_one_rel({rep.dual_forest, rep.dual_relation});
  rep.checks.emplace_back("dual frame is " + to_string(c), in_class(dual_flags, c));
  rep.iso = frame_iso(fr.forest, {rep.expected}, rep.dual_forest, {rep.dual_relation});
  rep.checks.emplace_back("isomorphic to the expected frame", rep.iso.has_value());
  rep.ok = all_pass(rep.checks);
  return rep;
}

FrameAxiomReport frame_side_axiom_check(const TwoRelFrame& fr) {
  require_forest_frame(fr);
  const Forest& F = fr.forest;
  const Rel& ge = F.geq_rel();
  const Rel& le = F.leq_rel();
  const Rel rbp = compose(fr.rbox, ge);
  const Rel rdp = compose(fr.rdia, le);
  const Rel rp = intersect(rbp, rdp);

  FrameAxiomReport rep;
  rep.d1_frame = rbp == compose(rp, ge);
  rep.d2_frame = rdp == compose(rp, le);
  rep.fs2_frame = rbp == compose(ge, rp);

  const ComplexGao cg = complex_algebra(F, fr.rbox, fr.rdia);
  const VarietyFlags v = classify(cg.gao);
  rep.d1_algebra = v.d1.holds;
  rep.d2_algebra = v.d2.holds;
  rep.fs2_algebra = v.fs2.holds;

  const InducedRelations ind = induced_relations(cg.gao);
  const std::vector<Node> k = point_map_nodes(F);
  bool fwd_box = true, fwd_dia = true, back_box = true, back_dia = true;
  for (Node x = 0; x < F.size(); ++x) {
    for (Node y = 0; y < F.size(); ++y) {
      const bool gb = ind.rbox.has(k[x], k[y]);
      const bool gd = ind.rdia.has(k[x], k[y]);
      if (fr.rbox.has(x, y) && !gb) fwd_box = false;
      if (fr.rdia.has(x, y) && !gd) fwd_dia = false;
      if (gb && !fr.rbox.has(x, y)) back_box = false;
      if (gd && !fr.rdia.has(x, y)) back_dia = false;
    }
  }
  rep.key_transfer.emplace_back("box pairs transfer along k", fwd_box);
  rep.key_transfer.emplace_back("diamond pairs transfer along k", fwd_dia);
  if (rbp == fr.rbox) rep.key_transfer.emplace_back("box pairs reflect along k", back_box);
  if (rdp == fr.rdia) rep.key_transfer.emplace_back("diamond pairs reflect along k", back_dia);
  return rep;
}

}  // namespace gforest
