#include "gforest/duality.hpp"

#include <algorithm>

#include "gforest/error.hpp"

namespace gforest {

Spectrum spectrum(const GodelAlgebra& A) {
  const ElemSet gens = join_irreducibles(A);
  const int n = static_cast<int>(gens.size());
  Rel leq(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(A.name(gens[i]));
    for (int j = 0; j < n; ++j) {
      if (A.leq(gens[i], gens[j])) leq.add(i, j);
    }
  }
  Poset p(std::move(leq));
  if (!is_forest(p)) {
    throw TheoremViolation("prime filters of the input do not form a forest");
  }
  return {Forest(std::move(p), std::move(names)), gens};
}

Elem DownsetAlgebra::index_of(NodeSet s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s, canonical_less);
  if (it == sets.end() || *it != s) {
    throw PreconditionError("node set is not a downset of the forest");
  }
  return static_cast<Elem>(it - sets.begin());
}

DownsetAlgebra downset_algebra(const Forest& f) {
  std::vector<NodeSet> sets = downsets(f);
  const int n = static_cast<int>(sets.size());
  std::vector<std::string> names;
  names.reserve(n);
  for (NodeSet s : sets) names.push_back(format_set(f, s));

  DownsetAlgebra out{GodelAlgebra{}, sets};
  std::vector<Elem> meet(n * n), join(n * n), impl(n * n);
  const NodeSet all = f.carrier();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      meet[a * n + b] = out.index_of(sets[a] & sets[b]);
      join[a * n + b] = out.index_of(sets[a] | sets[b]);
      impl[a * n + b] = out.index_of(all & ~f.up_closure(sets[a] & ~sets[b]));
    }
  }
  out.algebra = GodelAlgebra(std::move(names), std::move(meet), std::move(join),
                             std::move(impl), 0, n - 1);
  return out;
}

std::vector<NodeSet> stone_map(const GodelAlgebra& A, const Spectrum& s) {
  std::vector<NodeSet> r(A.size(), 0);
  for (Elem x = 0; x < A.size(); ++x) {
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      if (A.leq(s.generators[i], x)) r[x] |= singleton(static_cast<Node>(i));
    }
  }
  return r;
}

std::vector<NodeSet> stone_map(const GodelAlgebra& A) { return stone_map(A, spectrum(A)); }

std::vector<ElemSet> point_map(const Forest& f) {
  const std::vector<NodeSet> sets = downsets(f);
  std::vector<ElemSet> k(f.size());
  for (Node x = 0; x < f.size(); ++x) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (contains(sets[i], x)) k[x].push_back(static_cast<Elem>(i));
    }
  }
  return k;
}

std::vector<Node> point_map_nodes(const Forest& f) {
  // k(x) is the filter generated by the principal downset of x.
  const DownsetAlgebra d = downset_algebra(f);
  const ElemSet gens = join_irreducibles(d.algebra);
  std::vector<Node> out(f.size(), -1);
  for (Node x = 0; x < f.size(); ++x) {
    const Elem e = d.index_of(f.order().down(x));
    auto it = std::find(gens.begin(), gens.end(), e);
    if (it == gens.end()) throw TheoremViolation("principal downset is not join-irreducible");
    out[x] = static_cast<Node>(it - gens.begin());
  }
  return out;
}

namespace {

bool preserves_operations(const GodelAlgebra& a, const GodelAlgebra& b, const ElemMap& m) {
  std::vector<char> hit(b.size(), 0);
  for (Elem x = 0; x < a.size(); ++x) {
    if (hit[m[x]]) return false;
    hit[m[x]] = 1;
  }
  if (m[a.bot()] != b.bot() || m[a.top()] != b.top()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (m[a.meet(x, y)] != b.meet(m[x], m[y])) return false;
      if (m[a.join(x, y)] != b.join(m[x], m[y])) return false;
      if (m[a.impl(x, y)] != b.impl(m[x], m[y])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> stone_failures(const GodelAlgebra& A, const Spectrum& s) {
  std::vector<std::string> failures;
  const DownsetAlgebra d = downset_algebra(s.forest);
  const std::vector<NodeSet> r = stone_map(A, s);
  ElemMap m(A.size());
  for (Elem x = 0; x < A.size(); ++x) {
    try {
      m[x] = d.index_of(r[x]);
    } catch (const PreconditionError&) {
      failures.push_back("r(" + A.name(x) + ") is not a downset");
      return failures;
    }
  }
  if (!preserves_operations(A, d.algebra, m)) failures.push_back("r does not preserve the operations");
  ElemSet image(m.begin(), m.end());
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end() ||
      static_cast<int>(image.size()) != d.algebra.size()) {
    failures.push_back("r is not a bijection");
  }
  return failures;
}

void for_each_algebra_iso(const GodelAlgebra& a, const GodelAlgebra& b,
                          const std::function<bool(const ElemMap&)>& visit) {
  if (a.size() != b.size()) return;
  const ElemSet ja = join_irreducibles(a);
  const ElemSet jb = join_irreducibles(b);
  if (ja.size() != jb.size()) return;
  const std::size_t k = ja.size();
  std::vector<Elem> img(k, -1);
  std::vector<char> used(k, 0);
  bool stop = false;

  auto extend = [&]() {
    ElemMap m(a.size(), b.bot());
    for (Elem x = 0; x < a.size(); ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        if (a.leq(ja[i], x)) m[x] = b.join(m[x], img[i]);
      }
    }
    if (preserves_operations(a, b, m)) stop = !visit(m);
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == k) {
      extend();
      return;
    }
    for (std::size_t c = 0; c < k && !stop; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        ok = a.leq(ja[p], ja[i]) == b.leq(img[p], jb[c]) &&
             a.leq(ja[i], ja[p]) == b.leq(jb[c], img[p]);
      }
      if (!ok) continue;
      used[c] = 1;
      img[i] = jb[c];
      self(self, i + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
}

std::optional<ElemMap> algebra_iso(const GodelAlgebra& a, const GodelAlgebra& b) {
  std::optional<ElemMap> found;
  for_each_algebra_iso(a, b, [&](const ElemMap& m) {
    found = m;
    return false;
  });
  return found;
}

namespace {

void for_each_frame_iso(const Forest& f1, const std::vector<Rel>& rels1, const Forest& f2,
                        const std::vector<Rel>& rels2,
                        const std::function<bool(const NodeMap&)>& visit) {
  const int n = f1.size();
  if (n != f2.size() || rels1.size() != rels2.size()) return;
  for (std::size_t i = 0; i < rels1.size(); ++i) {
    if (rels1[i].size() != n || rels2[i].size() != n) {
      throw StructuralError("relation carrier does not match its forest");
    }
    if (rels1[i].pair_count() != rels2[i].pair_count()) return;
  }
  NodeMap m(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;

  auto consistent = [&](Node u, Node v) {
    const Node mu = m[u], mv = m[v];
    if (f1.leq(u, v) != f2.leq(mu, mv) || f1.leq(v, u) != f2.leq(mv, mu)) return false;
    for (std::size_t r = 0; r < rels1.size(); ++r) {
      if (rels1[r].has(u, v) != rels2[r].has(mu, mv)) return false;
      if (rels1[r].has(v, u) != rels2[r].has(mv, mu)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, Node u) -> void {
    if (stop) return;
    if (u == n) {
      stop = !visit(m);
      return;
    }
    for (Node c = 0; c < n && !stop; ++c) {
      if (used[c]) continue;
      m[u] = c;
      bool ok = true;
      for (Node p = 0; p <= u && ok; ++p) ok = consistent(p, u);
      if (ok) {
        used[c] = 1;
        self(self, u + 1);
        used[c] = 0;
      }
    }
    m[u] = -1;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<NodeMap> frame_iso(const Forest& f1, const std::vector<Rel>& rels1,
                                 const Forest& f2, const std::vector<Rel>& rels2) {
  std::optional<NodeMap> found;
  for_each_frame_iso(f1, rels1, f2, rels2, [&](const NodeMap& m) {
    found = m;
    return false;
  });
  return found;
}

void for_each_automorphism(const Forest& f, const std::function<bool(const NodeMap&)>& visit) {
  for_each_frame_iso(f, {}, f, {}, visit);
}

Rel map_rel(const Rel& r, const NodeMap& m) {
  Rel out(r.size());
  for (const auto& [a, b] : r.pairs()) out.add(m[a], m[b]);
  return out;
}

}  // namespace gforest
