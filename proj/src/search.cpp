#include "gforest/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "gforest/error.hpp"

namespace gforest {

Budget Budget::from_env() {
  Budget b;
  if (const char* v = std::getenv("GF_MAX_NODES")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0 && n <= kMaxNodes) {
      b.forest_nodes = b.frame_nodes = b.gao_nodes = static_cast<int>(n);
    }
  }
  return b;
}

void Budget::set_timeout(std::chrono::milliseconds ms) {
  deadline = std::chrono::steady_clock::now() + ms;
}

void Budget::tick() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw BudgetError("wall-clock budget exhausted");
  }
}

// ---------------------------------------------------------------- forests

namespace {

// Rooted trees are encoded as "(" + sorted child codes + ")"; a forest is the
// sorted concatenation of its tree codes.
std::vector<std::string> split_trees(const std::string& code) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    depth += code[i] == '(' ? 1 : -1;
    if (depth == 0) {
      out.push_back(code.substr(start, i - start + 1));
      start = i + 1;
    }
  }
  return out;
}

std::string join_sorted(std::vector<std::string> trees) {
  std::sort(trees.begin(), trees.end());
  std::string out;
  for (const auto& t : trees) out += t;
  return out;
}

const std::vector<std::string>& forest_codes(int n) {
  static std::map<int, std::vector<std::string>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::set<std::string> codes;
  if (n == 0) {
    codes.insert("");
  } else {
    for (int m = 1; m <= n; ++m) {
      for (const auto& sub : forest_codes(m - 1)) {
        const std::string tree = "(" + sub + ")";
        for (const auto& rest : forest_codes(n - m)) {
          auto trees = split_trees(rest);
          trees.push_back(tree);
          codes.insert(join_sorted(std::move(trees)));
        }
      }
    }
  }
  return memo[n] = std::vector<std::string>(codes.begin(), codes.end());
}

Forest forest_from_code(const std::string& code) {
  // Breadth-first numbering so that parents precede their children.
  struct Item {
    std::string code;
    Node parent;
  };
  std::vector<Item> queue;
  for (auto& t : split_trees(code)) queue.push_back({t, -1});
  std::vector<Pair> covers;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Node self = static_cast<Node>(i);
    if (queue[i].parent >= 0) covers.emplace_back(queue[i].parent, self);
    const std::string inner = queue[i].code.substr(1, queue[i].code.size() - 2);
    for (auto& child : split_trees(inner)) queue.push_back({child, self});
  }
  return Forest::from_covers(static_cast<int>(queue.size()), covers);
}

}  // namespace

std::vector<Forest> enum_forests(int n, const Budget& budget) {
  if (n < 0) throw PreconditionError("forest size must be non-negative");
  if (n > budget.forest_nodes) {
    throw BudgetError("forest enumeration is capped at " + std::to_string(budget.forest_nodes) +
                      " nodes");
  }
  std::vector<Forest> out;
  for (const auto& c : forest_codes(n)) out.push_back(forest_from_code(c));
  return out;
}

// ---------------------------------------------------------------- frames

std::string to_string(FrameConstraint c) {
  switch (c) {
    case FrameConstraint::any: return "any";
    case FrameConstraint::forest: return "forest";
    case FrameConstraint::OR: return "OR";
    case FrameConstraint::P: return "P";
  }
  return "?";
}

std::optional<FrameConstraint> parse_constraint(const std::string& s) {
  if (s == "any") return FrameConstraint::any;
  if (s == "forest") return FrameConstraint::forest;
  if (s == "OR" || s == "or") return FrameConstraint::OR;
  if (s == "P" || s == "p") return FrameConstraint::P;
  return std::nullopt;
}

std::optional<Dedup> parse_dedup(const std::string& s) {
  if (s == "none") return Dedup::none;
  if (s == "tables") return Dedup::tables;
  if (s == "iso") return Dedup::iso;
  return std::nullopt;
}

namespace {

void require_frame_budget(const Forest& f, const Budget& b) {
  if (f.size() > b.frame_nodes) {
    throw BudgetError("frame enumeration is capped at " + std::to_string(b.frame_nodes) +
                      " nodes");
  }
}

// Nodes sorted so that every node comes after everything below it.
std::vector<Node> linear_extension(const Forest& f) {
  std::vector<Node> lin(f.size());
  for (Node x = 0; x < f.size(); ++x) lin[x] = x;
  std::stable_sort(lin.begin(), lin.end(), [&](Node a, Node b) {
    return cardinality(f.order().down(a)) < cardinality(f.order().down(b));
  });
  return lin;
}

// All relations satisfying the box-side (box=true) or diamond-side part of
// the constraint, sorted. Rows are chosen along a linear extension and each
// new row is checked only against the rows of nodes below it.
std::vector<Rel> relation_candidates(const Forest& f, FrameConstraint c, bool box,
                                     const Budget& budget) {
  const int n = f.size();
  const std::vector<Node> lin = linear_extension(f);
  const NodeSet rows_end = NodeSet{1} << n;
  std::vector<Rel> out;
  Rel cur(n);

  auto row_ok = [&](Node y, NodeSet row) {
    if (c == FrameConstraint::OR) {
      if (box ? !f.is_downset(row) : !f.is_upset(row)) return false;
    }
    const NodeSet below = f.order().down(y) & ~singleton(y);
    for (Node x : members(below)) {
      const NodeSet rx = cur.row(x);
      switch (c) {
        case FrameConstraint::any:
          break;
        case FrameConstraint::forest:
        case FrameConstraint::OR:
          if (box ? !subset_of(rx, row) : !subset_of(row, rx)) return false;
          break;
        case FrameConstraint::P:
          if (box ? !subset_of(rx, f.down_closure(row)) : !subset_of(row, f.up_closure(rx))) {
            return false;
          }
          break;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      budget.tick();
      out.push_back(cur);
      return;
    }
    const Node y = lin[i];
    for (NodeSet row = 0; row < rows_end; ++row) {
      if (!row_ok(y, row)) continue;
      cur.set_row(y, row);
      self(self, i + 1);
    }
    cur.set_row(y, 0);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeMap> automorphisms(const Forest& f) {
  std::vector<NodeMap> out;
  for_each_automorphism(f, [&](const NodeMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

NodeSet map_set(NodeSet s, const NodeMap& m) {
  NodeSet out = 0;
  for (Node x : members(s)) out |= singleton(m[x]);
  return out;
}

// Objects indexed 0..k-1 with an action of each automorphism on indices. A
// pair (i, j) is canonical when no automorphism maps it to a smaller pair.
struct IndexAction {
  std::vector<std::vector<int>> perm;  // perm[s][i]
};

bool canonical_pair(const IndexAction& a, const IndexAction& b, int i, int j) {
  for (std::size_t s = 0; s < a.perm.size(); ++s) {
    const std::pair<int, int> img{a.perm[s][i], b.perm[s][j]};
    if (img < std::pair<int, int>{i, j}) return false;
  }
  return true;
}

// Operator tables for a list of relations on a fixed downset algebra.
struct TableSet {
  std::vector<std::vector<Elem>> tables;  // sorted, distinct
  std::vector<int> representative;        // index into the relation list
  IndexAction action;
};

TableSet tables_for(const Forest& f, const DownsetAlgebra& d, const std::vector<Rel>& rels,
                    bool box, const std::vector<NodeMap>& autos) {
  const int n = d.algebra.size();
  std::map<std::vector<Elem>, int> first;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::vector<Elem> t(n);
    for (Elem e = 0; e < n; ++e) {
      t[e] = d.index_of(box ? beta(f, rels[i], d.sets[e]) : delta(f, rels[i], d.sets[e]));
    }
    first.emplace(std::move(t), static_cast<int>(i));
  }
  TableSet ts;
  std::map<std::vector<Elem>, int> id;
  for (auto& [t, rep] : first) {
    id.emplace(t, static_cast<int>(ts.tables.size()));
    ts.tables.push_back(t);
    ts.representative.push_back(rep);
  }
  for (const NodeMap& m : autos) {
    std::vector<Elem> emap(n);
    for (Elem e = 0; e < n; ++e) emap[e] = d.index_of(map_set(d.sets[e], m));
    std::vector<int> p(ts.tables.size());
    for (std::size_t k = 0; k < ts.tables.size(); ++k) {
      std::vector<Elem> img(n);
      for (Elem e = 0; e < n; ++e) img[emap[e]] = emap[ts.tables[k][e]];
      auto it = id.find(img);
      if (it == id.end()) throw TheoremViolation("automorphic image of a complex operator is missing");
      p[k] = it->second;
    }
    ts.action.perm.push_back(std::move(p));
  }
  return ts;
}

IndexAction relation_action(const std::vector<Rel>& rels, const std::vector<NodeMap>& autos) {
  IndexAction a;
  for (const NodeMap& m : autos) {
    std::vector<int> p(rels.size());
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const Rel img = map_rel(rels[k], m);
      auto it = std::lower_bound(rels.begin(), rels.end(), img);
      if (it == rels.end() || !(*it == img)) {
        throw TheoremViolation("automorphic image of a candidate relation is missing");
      }
      p[k] = static_cast<int>(it - rels.begin());
    }
    a.perm.push_back(std::move(p));
  }
  return a;
}

}  // namespace

bool enum_two_rel_frames(const Forest& f, FrameConstraint c, Dedup d, const Budget& budget,
                         const TwoRelVisitor& visit) {
  require_frame_budget(f, budget);
  if (d == Dedup::tables && c == FrameConstraint::any) {
    throw PreconditionError("operator-table dedup needs frames with downset-valued operators");
  }
  const std::vector<Rel> boxes = relation_candidates(f, c, true, budget);
  const std::vector<Rel> dias = relation_candidates(f, c, false, budget);

  if (d == Dedup::none) {
    for (const Rel& b : boxes) {
      for (const Rel& r : dias) {
        budget.tick();
        if (!visit(TwoRelFrame{f, b, r})) return false;
      }
    }
    return true;
  }

  const std::vector<NodeMap> autos = automorphisms(f);
  if (d == Dedup::iso) {
    const IndexAction ab = relation_action(boxes, autos);
    const IndexAction ad = relation_action(dias, autos);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (std::size_t j = 0; j < dias.size(); ++j) {
        budget.tick();
        if (!canonical_pair(ab, ad, static_cast<int>(i), static_cast<int>(j))) continue;
        if (!visit(TwoRelFrame{f, boxes[i], dias[j]})) return false;
      }
    }
    return true;
  }

  const DownsetAlgebra da = downset_algebra(f);
  const TableSet tb = tables_for(f, da, boxes, true, autos);
  const TableSet td = tables_for(f, da, dias, false, autos);
  for (std::size_t i = 0; i < tb.tables.size(); ++i) {
    for (std::size_t j = 0; j < td.tables.size(); ++j) {
      budget.tick();
      if (!canonical_pair(tb.action, td.action, static_cast<int>(i), static_cast<int>(j))) continue;
      if (!visit(TwoRelFrame{f, boxes[tb.representative[i]], dias[td.representative[j]]})) {
        return false;
      }
    }
  }
  return true;
}

bool enum_all_one_rel_frames(const Forest& f, const Budget& budget, const OneRelVisitor& visit) {
  require_frame_budget(f, budget);
  const int n = f.size();
  const NodeSet rows_end = NodeSet{1} << n;
  OneRelFrame fr{f, Rel(n)};
  // Odometer over the rows, last row fastest.
  while (true) {
    budget.tick();
    if (!visit(fr)) return false;
    int i = n - 1;
    while (i >= 0) {
      const NodeSet next = fr.r.row(i) + 1;
      if (next < rows_end) {
        fr.r.set_row(i, next);
        break;
      }
      fr.r.set_row(i, 0);
      --i;
    }
    if (i < 0) return true;
  }
}

bool enum_one_rel_frames(const Forest& f, OneRelClass c, const Budget& budget,
                         const OneRelVisitor& visit) {
  return enum_all_one_rel_frames(f, budget, [&](const OneRelFrame& fr) {
    if (!in_class(classify_one_rel(fr), c)) return true;
    return visit(fr);
  });
}

// ---------------------------------------------------------------- GAOs

namespace {

void require_gao_budget(int n, const Budget& b) {
  if (n > b.gao_nodes) {
    throw BudgetError("GAO enumeration is capped at " + std::to_string(b.gao_nodes) +
                      " forest nodes");
  }
}

bool enum_gaos_on(const Forest& f, const Budget& budget, const GaoVisitor& visit) {
  const DownsetAlgebra da = downset_algebra(f);
  const std::vector<NodeMap> autos = automorphisms(f);
  const std::vector<Rel> boxes = relation_candidates(f, FrameConstraint::forest, true, budget);
  const std::vector<Rel> dias = relation_candidates(f, FrameConstraint::forest, false, budget);
  const TableSet tb = tables_for(f, da, boxes, true, autos);
  const TableSet td = tables_for(f, da, dias, false, autos);
  for (std::size_t i = 0; i < tb.tables.size(); ++i) {
    for (std::size_t j = 0; j < td.tables.size(); ++j) {
      budget.tick();
      if (!canonical_pair(tb.action, td.action, static_cast<int>(i), static_cast<int>(j))) continue;
      GaoInstance inst{TwoRelFrame{f, boxes[tb.representative[i]], dias[td.representative[j]]},
                       Gao{da.algebra, tb.tables[i], td.tables[j]}, da.sets};
      if (!visit(inst)) return false;
    }
  }
  return true;
}

bool enum_gaos_of_size(int n, const Budget& budget, const GaoVisitor& visit) {
  require_gao_budget(n, budget);
  for (const Forest& f : enum_forests(n, budget)) {
    if (!enum_gaos_on(f, budget, visit)) return false;
  }
  return true;
}

}  // namespace

bool enum_gaos(int n_max, const Budget& budget, const GaoVisitor& visit) {
  for (int n = 1; n <= n_max; ++n) {
    if (!enum_gaos_of_size(n, budget, visit)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- theorems

namespace {

using Failure = std::optional<std::string>;

std::string failed_checks(const CheckList& checks) {
  std::string out;
  for (const auto& [name, ok] : checks) {
    if (ok) continue;
    out += out.empty() ? "failed: " : "; ";
    out += name;
  }
  return out;
}

Witness gao_witness(const GaoInstance& inst, std::string why) {
  Witness w;
  w.description = std::move(why);
  w.gao = inst.gao;
  w.two_rel = inst.frame;
  w.size = inst.frame.forest.size();
  return w;
}

Witness two_rel_witness(const TwoRelFrame& fr, std::string why) {
  Witness w;
  w.description = std::move(why);
  w.two_rel = fr;
  w.size = fr.forest.size();
  return w;
}

Witness one_rel_witness(const OneRelFrame& fr, std::string why) {
  Witness w;
  w.description = std::move(why);
  w.one_rel = fr;
  w.size = fr.forest.size();
  return w;
}

// Runs pred over every enumerated GAO; stops at the first failure.
void over_gaos(TheoremReport& rep, const Budget& b,
               const std::function<std::optional<Failure>(const GaoInstance&)>& pred) {
  enum_gaos(rep.n_max, b, [&](const GaoInstance& inst) {
    const std::optional<Failure> res = pred(inst);
    if (!res) return true;  // not applicable
    ++rep.instances;
    if (*res) {
      rep.passed = false;
      rep.counterexample = gao_witness(inst, **res);
      return false;
    }
    return true;
  });
}

void over_two_rel(TheoremReport& rep, const Budget& b, FrameConstraint c,
                  const std::function<Failure(const TwoRelFrame&)>& pred) {
  require_gao_budget(rep.n_max, b);
  for (int n = 1; n <= rep.n_max && rep.passed; ++n) {
    for (const Forest& f : enum_forests(n, b)) {
      const bool done = enum_two_rel_frames(f, c, Dedup::none, b, [&](const TwoRelFrame& fr) {
        ++rep.instances;
        if (Failure why = pred(fr)) {
          rep.passed = false;
          rep.counterexample = two_rel_witness(fr, *why);
          return false;
        }
        return true;
      });
      if (!done) return;
    }
  }
}

void over_one_rel(TheoremReport& rep, const Budget& b, std::optional<OneRelClass> c,
                  const std::function<Failure(const OneRelFrame&)>& pred) {
  require_gao_budget(rep.n_max, b);
  for (int n = 1; n <= rep.n_max && rep.passed; ++n) {
    for (const Forest& f : enum_forests(n, b)) {
      auto body = [&](const OneRelFrame& fr) {
        ++rep.instances;
        if (Failure why = pred(fr)) {
          rep.passed = false;
          rep.counterexample = one_rel_witness(fr, *why);
          return false;
        }
        return true;
      };
      const bool done = c ? enum_one_rel_frames(f, *c, b, body) : enum_all_one_rel_frames(f, b, body);
      if (!done) return;
    }
  }
}

Failure representation_failure(const RepresentationReport& r) {
  if (r.ok()) return std::nullopt;
  std::string out;
  for (const auto& s : r.failures) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

void thm_representation(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    const RepresentationReport r = verify_representation(inst.gao);
    if (r.iso_ok && r.base_ok) return Failure{};
    return representation_failure(r);
  });
}

void thm_dunn_representation(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    if (!classify(inst.gao).dgao.holds) return std::nullopt;
    const RepresentationReport r = verify_representation(inst.gao);
    if (r.ok() && r.dunn_ok.value_or(false)) return Failure{};
    return representation_failure(r).value_or("single-relation check did not run");
  });
}

void thm_fs_representation(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    if (!classify(inst.gao).fsgao.holds) return std::nullopt;
    const RepresentationReport r = verify_representation(inst.gao);
    if (r.ok() && r.fs_ok.value_or(false)) return Failure{};
    return representation_failure(r).value_or("composed-relation check did not run");
  });
}

void thm_axiom_relations(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    const VarietyFlags v = classify(inst.gao);
    const InducedRelations ind = induced_relations(inst.gao);
    const Rel& ge = ind.spec.forest.geq_rel();
    const Rel& le = ind.spec.forest.leq_rel();
    std::string out;
    if (v.d1.holds != (ind.rbox == compose(ind.ra, ge))) out += "D1 vs R_box = R o >=; ";
    if (v.d2.holds != (ind.rdia == compose(ind.ra, le))) out += "D2 vs R_dia = R o <=; ";
    if (v.fs2.holds != (ind.rbox == compose(ge, ind.ra))) out += "FS2 vs R_box = >= o R; ";
    if (out.empty()) return Failure{};
    return Failure{out.substr(0, out.size() - 2)};
  });
}

void thm_frame_axioms(TheoremReport& rep, const Budget& b) {
  over_two_rel(rep, b, FrameConstraint::forest, [](const TwoRelFrame& fr) -> Failure {
    const FrameAxiomReport r = frame_side_axiom_check(fr);
    if (r.consistent()) return std::nullopt;
    std::string out;
    if (r.d1_frame != r.d1_algebra) out += "D1 verdicts differ; ";
    if (r.d2_frame != r.d2_algebra) out += "D2 verdicts differ; ";
    if (r.fs2_frame != r.fs2_algebra) out += "FS2 verdicts differ; ";
    out += failed_checks(r.key_transfer);
    return out;
  });
}

void thm_d2_fs1(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    const VarietyFlags v = classify(inst.gao);
    if (v.d2.holds == v.fs1.holds) return Failure{};
    return Failure{v.d2.holds ? "D2 holds but FS1 fails" : "FS1 holds but D2 fails"};
  });
}

void thm_prime_transform(TheoremReport& rep, const Budget& b) {
  over_two_rel(rep, b, FrameConstraint::forest, [](const TwoRelFrame& fr) -> Failure {
    const TwoRelFrame pt = prime_transform(fr);
    if (!same_operators(fr.forest, fr.rbox, fr.rdia, pt.rbox, pt.rdia)) {
      return "operators change under the prime transform";
    }
    if (!classify_two_rel(pt).or_frame()) return "prime transform is not an OR-frame";
    return std::nullopt;
  });
}

void thm_preimages(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    if (auto j = preimage_check(inst.gao)) {
      return Failure{"preimage of the prime filter generated by " + inst.gao.algebra.name(*j)};
    }
    return Failure{};
  });
}

std::function<void(TheoremReport&, const Budget&)> roundtrip(OneRelClass c) {
  return [c](TheoremReport& rep, const Budget& b) {
    over_one_rel(rep, b, c, [c](const OneRelFrame& fr) -> Failure {
      const RoundtripReport r = dual_one_rel_roundtrip(fr, c);
      if (r.ok) return std::nullopt;
      return failed_checks(r.checks);
    });
  };
}

std::function<void(TheoremReport&, const Budget&)> normalization(OneRelClass c) {
  return [c](TheoremReport& rep, const Budget& b) {
    over_one_rel(rep, b, c, [c](const OneRelFrame& fr) -> Failure {
      const OneRelTransform t = one_rel_transform(fr, c);
      if (all_pass(t.checks)) return std::nullopt;
      return failed_checks(t.checks);
    });
  };
}

void thm_w_frames(TheoremReport& rep, const Budget& b) {
  over_one_rel(rep, b, OneRelClass::W, [](const OneRelFrame& fr) -> Failure {
    const OneRelComplex cx = complex_one_rel(fr, OneRelClass::W);
    if (all_pass(cx.checks)) return std::nullopt;
    return failed_checks(cx.checks);
  });
}

void thm_wgao_frames(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    if (!classify(inst.gao).wgao.holds) return std::nullopt;
    const InducedRelations ind = induced_relations(inst.gao);
    const OneRelFlags f = classify_one_rel({ind.spec.forest, ind.ra});
    if (f.w()) return Failure{};
    return Failure{f.W1.holds ? "induced relation fails W2" : "induced relation fails W1"};
  });
}

void thm_w(TheoremReport& rep, const Budget& b) {
  thm_w_frames(rep, b);
  if (rep.passed) thm_wgao_frames(rep, b);
}

void thm_boolean_closure(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    if (!classify(inst.gao).dgao.holds) return std::nullopt;
    if (boolean_image_check(inst.gao)) return Failure{};
    return Failure{"an operator maps a Boolean element outside the Boolean elements"};
  });
}

void thm_monotone_relations(TheoremReport& rep, const Budget& b) {
  over_gaos(rep, b, [](const GaoInstance& inst) -> std::optional<Failure> {
    const InducedRelations ind = induced_relations(inst.gao);
    const TwoRelFlags f = classify_two_rel({ind.spec.forest, ind.rbox, ind.rdia});
    if (!f.M.holds) return Failure{"induced box relation fails M"};
    if (!f.A.holds) return Failure{"induced diamond relation fails A"};
    return Failure{};
  });
}

void thm_second_transform(TheoremReport& rep, const Budget& b) {
  over_two_rel(rep, b, FrameConstraint::P, [](const TwoRelFrame& fr) -> Failure {
    const TwoRelFrame st = second_transform(fr);
    if (!classify_two_rel(st).forest_frame()) return "second transform is not a forest frame";
    if (!same_operators(fr.forest, fr.rbox, fr.rdia, st.rbox, st.rdia)) {
      return "operators change under the second transform";
    }
    return std::nullopt;
  });
}

void thm_class_inclusions(TheoremReport& rep, const Budget& b) {
  over_two_rel(rep, b, FrameConstraint::any, [](const TwoRelFrame& fr) -> Failure {
    const TwoRelFlags f = classify_two_rel(fr);
    if (f.or_frame() && !f.forest_frame()) return "OR-frame that is not a forest frame";
    if (f.forest_frame() && !f.p_frame()) return "forest frame that is not a P-frame";
    return std::nullopt;
  });
}

void thm_one_rel_conditions(TheoremReport& rep, const Budget& b) {
  over_one_rel(rep, b, std::nullopt, [](const OneRelFrame& fr) -> Failure {
    const Rel& ge = fr.forest.geq_rel();
    const Rel& le = fr.forest.leq_rel();
    const Rel& r = fr.r;
    const OneRelFlags f = classify_one_rel(fr);
    if ((compose(le, r, le) == compose(r, le)) != f.FS1f.holds) return "FS1 reformulation";
    if ((compose(ge, r, ge) == compose(ge, r)) != f.FS2f.holds) return "FS2 reformulation";
    if ((compose(ge, r, ge) == compose(r, ge)) != f.CJ2.holds) return "CJ2 reformulation";
    if ((f.FS1f.holds && f.FSCJ2.holds) != f.fsd()) return "FSD reformulation";
    return std::nullopt;
  });
}

void thm_w_fs_transform(TheoremReport& rep, const Budget& b) {
  over_one_rel(rep, b, OneRelClass::W, [](const OneRelFrame& fr) -> Failure {
    const OneRelTransform t = w_transform(fr);
    if (all_pass(t.checks)) return std::nullopt;
    return failed_checks(t.checks);
  });
}

// diamond a = not box not a on every element.
bool dual_operators(const Gao& g) {
  const GodelAlgebra& a = g.algebra;
  for (Elem e = 0; e < a.size(); ++e) {
    if (g.diamond[e] != a.neg(g.box[a.neg(e)])) return false;
  }
  return true;
}

void thm_separations(TheoremReport& rep, const Budget& b) {
  struct Part {
    const char* name;
    bool found = false;
  };
  Part parts[] = {{"DGAO not WGAO"},
                  {"WGAO and FSDGAO"},
                  {"FSDGAO not WGAO"},
                  {"WGAO not FSGAO"},
                  {"WGAO and FSGAO not BAO"}};
  over_gaos(rep, b, [&](const GaoInstance& inst) -> std::optional<Failure> {
    const VarietyFlags v = classify(inst.gao);
    if (v.bao.holds && dual_operators(inst.gao) && !(v.wgao.holds && v.fsgao.holds)) {
      return Failure{"BAO with dual operators outside WGAO and FSGAO"};
    }
    if (v.wgao.holds && !v.dgao.holds) return Failure{"WGAO outside DGAO"};
    parts[0].found |= v.dgao.holds && !v.wgao.holds;
    parts[1].found |= v.wgao.holds && v.fsdgao.holds;
    parts[2].found |= v.fsdgao.holds && !v.wgao.holds;
    parts[3].found |= v.wgao.holds && !v.fsgao.holds;
    parts[4].found |= v.wgao.holds && v.fsgao.holds && !v.bao.holds;
    return Failure{};
  });
  if (!rep.passed) return;
  std::string missing;
  for (const Part& p : parts) {
    if (p.found) continue;
    if (!missing.empty()) missing += "; ";
    missing += p.name;
  }
  if (!missing.empty()) {
    rep.passed = false;
    rep.counterexample = Witness{"no instance found for: " + missing, {}, {}, {}, rep.n_max};
  }
}

struct Entry {
  TheoremInfo info;
  std::function<void(TheoremReport&, const Budget&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"representation", {"thm:isoBox", "isoBox"},
        "every GAO is isomorphic to the complex algebra of its dual frame via r"},
       thm_representation},
      {{"dunn-representation", {"isoDUNN"},
        "a Dunn GAO is represented by its single dual relation R_A"},
       thm_dunn_representation},
      {{"fs-representation", {"FS-representation", "fsrep"},
        "a Fischer Servi GAO is represented by >= o R_A and R_A"},
       thm_fs_representation},
      {{"axiom-relation-correspondence", {"CJteo"},
        "D1, D2 and FS2 match R_box = R_A o >=, R_dia = R_A o <=, R_box = >= o R_A"},
       thm_axiom_relations},
      {{"frame-axiom-correspondence", {"keyD1", "key"},
        "frame-side D1, D2, FS2 conditions match the complex algebra; k transfers relations"},
       thm_frame_axioms},
      {{"d2-iff-fs1", {"prop:D2-FS2", "D2-FS1"}, "D2 holds iff FS1 holds"}, thm_d2_fs1},
      {{"prime-transform-invariance", {"lemma:diamond", "diamond", "cor:HKframe"},
        "the prime transform keeps beta and delta and yields an OR-frame"},
       thm_prime_transform},
      {{"preimage-filters", {"prop:basic"},
        "box preimages of prime filters are filters, diamond preimages cofilters"},
       thm_preimages},
      {{"fs-roundtrip", {"FSP1"}, "an FS frame is recovered from its complex algebra"},
       roundtrip(OneRelClass::FS)},
      {{"fs-normalization", {"FSP2"}, "properties of R' = (>= o R) & (R o <=) on FS frames"},
       normalization(OneRelClass::FS)},
      {{"cj-roundtrip", {"CJP1"}, "a CJ frame's complex algebra dualizes to (F, R')"},
       roundtrip(OneRelClass::CJ)},
      {{"cj-normalization", {"CJP2"}, "properties of R' = (R o >=) & (R o <=) on CJ frames"},
       normalization(OneRelClass::CJ)},
      {{"fsd-roundtrip", {"FSDP1"}, "an FSD frame is recovered from its complex algebra"},
       roundtrip(OneRelClass::FSD)},
      {{"fsd-normalization", {"FSDP2"}, "properties of R' on FSD frames"},
       normalization(OneRelClass::FSD)},
      {{"w-frames-give-wgao", {"W-theorem-1"}, "the complex algebra of a W frame is a WGAO"},
       thm_w_frames},
      {{"wgao-gives-w-frame", {"W-theorem-2"}, "the dual relation of a WGAO is a W relation"},
       thm_wgao_frames},
      {{"w-theorem", {"W", "W-theorem"}, "both directions of the W frame correspondence"}, thm_w},
      {{"boolean-closure", {"prop:bool", "bool"},
        "in a Dunn GAO box and diamond preserve Boolean elements"},
       thm_boolean_closure},
      {{"relation-monotonicity", {"lemmaMA"},
        "the induced box relation satisfies M and the diamond relation A"},
       thm_monotone_relations},
      {{"second-transform-invariance", {"eqRsecond", "second-transform"},
        "the second transform of a P-frame is a forest frame with the same operators"},
       thm_second_transform},
      {{"frame-class-inclusions", {"class-inclusions"}, "OR-frames are forest frames are P-frames"},
       thm_class_inclusions},
      {{"one-relation-conditions", {"newxx", "CJcond"},
        "equational reformulations of FS1, FS2, CJ2 and FSD"},
       thm_one_rel_conditions},
      {{"w-fs-transform", {"remCJW"}, "R o >= of a W frame is both W and FS"},
       thm_w_fs_transform},
      {{"variety-separations", {"propFinal"},
        "witnesses separating DGAO, WGAO, FSDGAO, FSGAO and BAO exist"},
       thm_separations},
  };
  return table;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::optional<std::string> resolve_theorem(const std::string& name) {
  for (const Entry& e : entries()) {
    if (e.info.id == name) return e.info.id;
    for (const auto& a : e.info.aliases) {
      if (a == name) return e.info.id;
    }
  }
  return std::nullopt;
}

TheoremReport verify_theorem(const std::string& id, int n_max, const Budget& budget) {
  const auto canon = resolve_theorem(id);
  if (!canon) throw PreconditionError("unknown theorem: " + id);
  for (const Entry& e : entries()) {
    if (e.info.id != *canon) continue;
    TheoremReport rep;
    rep.id = e.info.id;
    rep.statement = e.info.statement;
    rep.n_max = n_max;
    require_gao_budget(n_max, budget);
    e.run(rep, budget);
    return rep;
  }
  throw PreconditionError("unknown theorem: " + id);
}

// ---------------------------------------------------------------- hunts

namespace {

struct Hunt {
  PropertyInfo info;
  std::function<void(HuntReport&, int, const Budget&)> run;
};

std::function<void(HuntReport&, int, const Budget&)> gao_hunt(
    std::function<Failure(const VarietyFlags&)> violated) {
  return [violated](HuntReport& rep, int n, const Budget& b) {
    enum_gaos_of_size(n, b, [&](const GaoInstance& inst) {
      ++rep.searched;
      if (Failure why = violated(classify(inst.gao))) {
        rep.found = true;
        rep.witness = gao_witness(inst, *why);
        return false;
      }
      return true;
    });
  };
}

std::function<void(HuntReport&, int, const Budget&)> frame_hunt(
    FrameConstraint c, std::function<Failure(const TwoRelFrame&)> violated) {
  return [c, violated](HuntReport& rep, int n, const Budget& b) {
    for (const Forest& f : enum_forests(n, b)) {
      const bool done = enum_two_rel_frames(f, c, Dedup::none, b, [&](const TwoRelFrame& fr) {
        ++rep.searched;
        if (Failure why = violated(fr)) {
          rep.found = true;
          rep.witness = two_rel_witness(fr, *why);
          return false;
        }
        return true;
      });
      if (!done) return;
    }
  };
}

const std::vector<Hunt>& hunts() {
  static const std::vector<Hunt> table = {
      {{"dgao-implies-fsgao", "every Dunn GAO is a Fischer Servi GAO"},
       gao_hunt([](const VarietyFlags& v) -> Failure {
         if (v.dgao.holds && !v.fsgao.holds) return "DGAO but " + v.fsgao.failed_law + " fails";
         return std::nullopt;
       })},
      {{"fsgao-implies-dgao", "every Fischer Servi GAO is a Dunn GAO"},
       gao_hunt([](const VarietyFlags& v) -> Failure {
         if (v.fsgao.holds && !v.dgao.holds) return "FSGAO but " + v.dgao.failed_law + " fails";
         return std::nullopt;
       })},
      {{"fsdgao-implies-wgao", "every FSD GAO is a W GAO"},
       gao_hunt([](const VarietyFlags& v) -> Failure {
         if (v.fsdgao.holds && !v.wgao.holds) return "FSDGAO but " + v.wgao.failed_law + " fails";
         return std::nullopt;
       })},
      {{"wgao-implies-fsgao", "every W GAO is a Fischer Servi GAO"},
       gao_hunt([](const VarietyFlags& v) -> Failure {
         if (v.wgao.holds && !v.fsgao.holds) return "WGAO but " + v.fsgao.failed_law + " fails";
         return std::nullopt;
       })},
      {{"bao-implies-fsdgao", "every GAO whose elements are all Boolean is an FSDGAO"},
       gao_hunt([](const VarietyFlags& v) -> Failure {
         if (v.bao.holds && !v.fsdgao.holds) return "BAO but " + v.fsdgao.failed_law + " fails";
         return std::nullopt;
       })},
      {{"forest-implies-or", "every forest frame is an OR-frame"},
       frame_hunt(FrameConstraint::forest, [](const TwoRelFrame& fr) -> Failure {
         const TwoRelFlags f = classify_two_rel(fr);
         if (f.or_frame()) return std::nullopt;
         return f.OR1.holds ? "OR2 fails" : "OR1 fails";
       })},
      {{"p-implies-forest", "every P-frame is a forest frame"},
       frame_hunt(FrameConstraint::P, [](const TwoRelFrame& fr) -> Failure {
         const TwoRelFlags f = classify_two_rel(fr);
         if (f.forest_frame()) return std::nullopt;
         return f.M.holds ? "A fails" : "M fails";
       })},
      {{"complex-gao-axioms", "complex algebras of forest frames satisfy the GAO axioms"},
       frame_hunt(FrameConstraint::forest, [](const TwoRelFrame& fr) -> Failure {
         if (auto bad = validate_gao(complex_gao(fr).gao)) return bad->describe();
         return std::nullopt;
       })},
  };
  return table;
}

}  // namespace

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> v;
    for (const Hunt& h : hunts()) v.push_back(h.info);
    return v;
  }();
  return infos;
}

HuntReport find_counterexample(const std::string& property, int n_max, const Budget& budget) {
  for (const Hunt& h : hunts()) {
    if (h.info.id != property) continue;
    HuntReport rep;
    rep.property = h.info.id;
    rep.statement = h.info.statement;
    for (int n = 1; n <= n_max && !rep.found; ++n) h.run(rep, n, budget);
    return rep;
  }
  throw PreconditionError("unknown property: " + property);
}

}  // namespace gforest
