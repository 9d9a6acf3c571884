#include "gforest/modal.hpp"

#include <algorithm>

#include "gforest/error.hpp"

namespace gforest {

namespace {

void check_tables(const Gao& g) {
  const auto n = static_cast<std::size_t>(g.algebra.size());
  if (g.box.size() != n || g.diamond.size() != n) {
    throw StructuralError("operator tables must have one entry per element");
  }
  for (Elem e : g.box) {
    if (e < 0 || e >= g.algebra.size()) throw StructuralError("box entry out of range");
  }
  for (Elem e : g.diamond) {
    if (e < 0 || e >= g.algebra.size()) throw StructuralError("diamond entry out of range");
  }
}

NodeSet require_downset(const Forest& f, NodeSet s, const char* op) {
  for (Node y : members(s)) {
    const NodeSet missing = f.order().down(y) & ~s;
    if (missing != 0) {
      throw PreconditionError(std::string(op) + " output is not a downset: node " +
                              f.name(std::countr_zero(missing)) + " lies below " + f.name(y));
    }
  }
  return s;
}

}  // namespace

std::optional<ViolationReport> validate_gao(const Gao& g) {
  check_tables(g);
  const GodelAlgebra& A = g.algebra;
  const int n = A.size();
  if (g.box[A.top()] != A.top()) {
    return ViolationReport{LawKind::box_top, "box-top", {A.top()}};
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (g.box[A.meet(x, y)] != A.meet(g.box[x], g.box[y])) {
        return ViolationReport{LawKind::box_meet, "box-meet", {x, y}};
      }
    }
  }
  if (g.diamond[A.bot()] != A.bot()) {
    return ViolationReport{LawKind::diamond_bottom, "diamond-bottom", {A.bot()}};
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (g.diamond[A.join(x, y)] != A.join(g.diamond[x], g.diamond[y])) {
        return ViolationReport{LawKind::diamond_join, "diamond-join", {x, y}};
      }
    }
  }
  return std::nullopt;
}

InducedRelations induced_relations(const Gao& g) {
  const GodelAlgebra& A = g.algebra;
  Spectrum spec = spectrum(A);
  const ElemSet& j = spec.generators;
  const int k = static_cast<int>(j.size());
  Rel rbox(k), rdia(k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      bool in = true;
      for (Elem a = 0; a < A.size() && in; ++a) {
        if (A.leq(j[p], g.box[a]) && !A.leq(j[q], a)) in = false;
      }
      if (in) rbox.add(p, q);
      if (A.leq(j[p], g.diamond[j[q]])) rdia.add(p, q);
    }
  }
  Rel ra = intersect(rbox, rdia);
  return {std::move(spec), std::move(rbox), std::move(rdia), std::move(ra)};
}

NodeSet beta(const Forest& f, const Rel& r, NodeSet a) {
  NodeSet out = 0;
  for (Node y = 0; y < f.size(); ++y) {
    if (subset_of(r.row(y), a)) out |= singleton(y);
  }
  return require_downset(f, out, "beta");
}

NodeSet delta(const Forest& f, const Rel& r, NodeSet a) {
  NodeSet out = 0;
  for (Node y = 0; y < f.size(); ++y) {
    if ((r.row(y) & a) != 0) out |= singleton(y);
  }
  return require_downset(f, out, "delta");
}

ComplexGao complex_algebra(const Forest& f, const Rel& rbox, const Rel& rdia) {
  DownsetAlgebra d = downset_algebra(f);
  const int n = d.algebra.size();
  std::vector<Elem> box(n), dia(n);
  for (Elem e = 0; e < n; ++e) {
    box[e] = d.index_of(beta(f, rbox, d.sets[e]));
    dia[e] = d.index_of(delta(f, rdia, d.sets[e]));
  }
  return {Gao{std::move(d.algebra), std::move(box), std::move(dia)}, std::move(d.sets)};
}

RepresentationReport verify_representation(const Gao& g) {
  RepresentationReport rep;
  const GodelAlgebra& A = g.algebra;
  const InducedRelations ind = induced_relations(g);
  const Forest& F = ind.spec.forest;
  rep.failures = stone_failures(A, ind.spec);
  if (!rep.failures.empty()) {
    rep.iso_ok = false;
    return rep;
  }
  const std::vector<NodeSet> r = stone_map(A, ind.spec);

  // Checks op against beta/delta over the given relations for every element.
  auto check = [&](const Rel& rb, const Rel& rd, const std::string& tag) {
    bool ok = true;
    for (Elem a = 0; a < A.size(); ++a) {
      try {
        if (r[g.box[a]] != beta(F, rb, r[a])) {
          ok = false;
          rep.failures.push_back(tag + ": r(box " + A.name(a) + ") != beta(r(" + A.name(a) + "))");
        }
        if (r[g.diamond[a]] != delta(F, rd, r[a])) {
          ok = false;
          rep.failures.push_back(tag + ": r(diamond " + A.name(a) + ") != delta(r(" +
                                 A.name(a) + "))");
        }
      } catch (const PreconditionError& e) {
        ok = false;
        rep.failures.push_back(tag + ": " + e.what());
      }
    }
    return ok;
  };

  rep.base_ok = check(ind.rbox, ind.rdia, "two relations");
  const VarietyFlags flags = classify(g);
  if (flags.dgao.holds) rep.dunn_ok = check(ind.ra, ind.ra, "single relation");
  if (flags.fsgao.holds) rep.fs_ok = check(compose(F.geq_rel(), ind.ra), ind.ra, "fischer servi");
  return rep;
}

std::vector<std::pair<std::string, const Flag*>> VarietyFlags::entries() const {
  return {{"GAO", &gao},   {"D1", &d1},         {"D2", &d2},       {"FS1", &fs1},
          {"FS2", &fs2},   {"BB", &bb},         {"DB", &db},       {"DGAO", &dgao},
          {"FSGAO", &fsgao}, {"FSDGAO", &fsdgao}, {"WGAO", &wgao}, {"BAO", &bao}};
}

namespace {

Flag conj(std::initializer_list<std::pair<const char*, const Flag*>> parts) {
  for (const auto& [name, f] : parts) {
    if (!f->holds) {
      Flag out = *f;
      if (out.failed_law.empty()) out.failed_law = name;
      return out;
    }
  }
  return {};
}

}  // namespace

VarietyFlags classify(const Gao& g) {
  check_tables(g);
  const GodelAlgebra& A = g.algebra;
  const int n = A.size();
  const auto& B = g.box;
  const auto& D = g.diamond;
  VarietyFlags v;

  if (auto bad = validate_gao(g)) {
    v.gao = {false, bad->law, {bad->witness}};
  }

  auto pairwise = [&](Flag& f, const char* law, auto&& holds) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!holds(a, b)) f.witnesses.push_back({a, b});
      }
    }
    f.holds = f.witnesses.empty();
    if (!f.holds) f.failed_law = law;
  };
  pairwise(v.d1, "D1", [&](Elem a, Elem b) {
    return A.leq(B[A.join(a, b)], A.join(B[a], D[b]));
  });
  pairwise(v.d2, "D2", [&](Elem a, Elem b) {
    return A.leq(A.meet(B[a], D[b]), D[A.meet(a, b)]);
  });
  pairwise(v.fs1, "FS1", [&](Elem a, Elem b) {
    return A.leq(D[A.impl(a, b)], A.impl(B[a], D[b]));
  });
  pairwise(v.fs2, "FS2", [&](Elem a, Elem b) {
    return A.leq(A.impl(D[a], B[b]), B[A.impl(a, b)]);
  });

  auto unary = [&](Flag& f, const char* law, auto&& holds) {
    for (Elem x = 0; x < n; ++x) {
      if (!holds(x)) f.witnesses.push_back({x});
    }
    f.holds = f.witnesses.empty();
    if (!f.holds) f.failed_law = law;
  };
  auto boolean = [&](Elem x) { return A.join(x, A.neg(x)) == A.top(); };
  unary(v.bb, "BB", [&](Elem x) { return boolean(B[x]); });
  unary(v.db, "DB", [&](Elem x) { return boolean(D[x]); });
  Flag all_boolean;
  unary(all_boolean, "boolean", boolean);

  v.dgao = conj({{"GAO", &v.gao}, {"D1", &v.d1}, {"D2", &v.d2}});
  v.fsgao = conj({{"GAO", &v.gao}, {"FS1", &v.fs1}, {"FS2", &v.fs2}});
  v.fsdgao = conj({{"DGAO", &v.dgao}, {"FSGAO", &v.fsgao}});
  v.wgao = conj({{"DGAO", &v.dgao}, {"BB", &v.bb}, {"DB", &v.db}});
  v.bao = conj({{"GAO", &v.gao}, {"boolean", &all_boolean}});
  return v;
}

bool boolean_image_check(const Gao& g) {
  const ElemSet b = boolean_elements(g.algebra);
  for (Elem x : b) {
    if (!std::binary_search(b.begin(), b.end(), g.box[x])) return false;
    if (!std::binary_search(b.begin(), b.end(), g.diamond[x])) return false;
  }
  return true;
}

ElemSet preimage(const GodelAlgebra& A, const std::vector<Elem>& op, const ElemSet& f) {
  ElemSet out;
  for (Elem a = 0; a < A.size(); ++a) {
    if (std::binary_search(f.begin(), f.end(), op[a])) out.push_back(a);
  }
  return out;
}

std::optional<Elem> preimage_check(const Gao& g) {
  for (const PrimeFilter& pf : prime_filters(g.algebra)) {
    if (!is_filter(g.algebra, preimage(g.algebra, g.box, pf.members))) return pf.generator;
    // A diamond that is constantly bottom has an empty preimage; it satisfies
    // both cofilter conditions vacuously and is accepted here.
    const ElemSet dpre = preimage(g.algebra, g.diamond, pf.members);
    if (!dpre.empty() && !is_cofilter(g.algebra, dpre)) return pf.generator;
  }
  return std::nullopt;
}

}  // namespace gforest
