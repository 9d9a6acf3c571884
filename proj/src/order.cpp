#include "gforest/order.hpp"

#include <algorithm>

#include "gforest/error.hpp"

namespace gforest {

std::vector<Node> members(NodeSet s) {
  std::vector<Node> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

NodeSet from_members(const std::vector<Node>& nodes) {
  NodeSet s = 0;
  for (Node x : nodes) s |= singleton(x);
  return s;
}

bool canonical_less(NodeSet a, NodeSet b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  // Equal sizes: the first differing member decides. The set holding the
  // lowest element of the symmetric difference sorts first.
  const NodeSet diff = a ^ b;
  if (diff == 0) return false;
  return contains(a, std::countr_zero(diff));
}

// ---------------------------------------------------------------- Rel

Rel::Rel(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxNodes) {
    throw StructuralError("relation carrier size out of range: " + std::to_string(n));
  }
}

Rel::Rel(int n, const std::vector<Pair>& pairs) : Rel(n) {
  for (const auto& [a, b] : pairs) add(a, b);
}

Rel Rel::identity(int n) {
  Rel r(n);
  for (Node x = 0; x < n; ++x) r.rows_[x] = singleton(x);
  return r;
}

Rel Rel::full(int n) {
  Rel r(n);
  for (Node x = 0; x < n; ++x) r.rows_[x] = full_set(n);
  return r;
}

void Rel::add(Node a, Node b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) {
    throw StructuralError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") outside carrier of size " + std::to_string(n_));
  }
  rows_[a] |= singleton(b);
}

std::size_t Rel::pair_count() const {
  std::size_t c = 0;
  for (NodeSet r : rows_) c += cardinality(r);
  return c;
}

std::vector<Pair> Rel::pairs() const {
  std::vector<Pair> out;
  for (Node a = 0; a < n_; ++a) {
    for (Node b : members(rows_[a])) out.emplace_back(a, b);
  }
  return out;
}

Rel Rel::converse() const {
  Rel r(n_);
  for (Node a = 0; a < n_; ++a) {
    for (Node b : members(rows_[a])) r.rows_[b] |= singleton(a);
  }
  return r;
}

namespace {

void require_same_carrier(const Rel& s, const Rel& t) {
  if (s.size() != t.size()) {
    throw StructuralError("relation carriers differ: " + std::to_string(s.size()) +
                          " vs " + std::to_string(t.size()));
  }
}

}  // namespace

Rel compose(const Rel& s, const Rel& t) {
  require_same_carrier(s, t);
  Rel out(s.size());
  for (Node a = 0; a < s.size(); ++a) {
    NodeSet acc = 0;
    for (NodeSet mid = s.row(a); mid != 0; mid &= mid - 1) {
      acc |= t.row(std::countr_zero(mid));
    }
    out.set_row(a, acc);
  }
  return out;
}

Rel compose(const Rel& r, const Rel& s, const Rel& t) { return compose(compose(r, s), t); }

Rel intersect(const Rel& s, const Rel& t) {
  require_same_carrier(s, t);
  Rel out(s.size());
  for (Node a = 0; a < s.size(); ++a) out.set_row(a, s.row(a) & t.row(a));
  return out;
}

Rel unite(const Rel& s, const Rel& t) {
  require_same_carrier(s, t);
  Rel out(s.size());
  for (Node a = 0; a < s.size(); ++a) out.set_row(a, s.row(a) | t.row(a));
  return out;
}

bool included(const Rel& s, const Rel& t) {
  require_same_carrier(s, t);
  for (Node a = 0; a < s.size(); ++a) {
    if (!subset_of(s.row(a), t.row(a))) return false;
  }
  return true;
}

std::vector<Pair> difference(const Rel& s, const Rel& t) {
  require_same_carrier(s, t);
  std::vector<Pair> out;
  for (Node a = 0; a < s.size(); ++a) {
    for (Node b : members(s.row(a) & ~t.row(a))) out.emplace_back(a, b);
  }
  return out;
}

// ---------------------------------------------------------------- Poset

Poset::Poset(Rel leq) : leq_(std::move(leq)) {
  const int n = leq_.size();
  for (Node a = 0; a < n; ++a) {
    if (!leq_.has(a, a)) {
      throw StructuralError("order is not reflexive at node " + std::to_string(a));
    }
    for (Node b : members(leq_.row(a))) {
      if (b != a && leq_.has(b, a)) {
        throw StructuralError("order is not antisymmetric on (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
      }
      if (!subset_of(leq_.row(b), leq_.row(a))) {
        throw StructuralError("order is not transitive through node " + std::to_string(b));
      }
    }
  }
  geq_ = leq_.converse();
}

Poset Poset::from_covers(int n, const std::vector<Pair>& covers) {
  Rel r = Rel::identity(n);
  for (const auto& [a, b] : covers) r.add(a, b);
  // Warshall closure on row masks.
  for (Node k = 0; k < n; ++k) {
    for (Node a = 0; a < n; ++a) {
      if (r.has(a, k)) r.set_row(a, r.row(a) | r.row(k));
    }
  }
  return Poset(std::move(r));
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  for (Node a = 0; a < size(); ++a) {
    const NodeSet strict_up = up(a) & ~singleton(a);
    for (Node b : members(strict_up)) {
      // b covers a iff nothing strictly between them.
      const NodeSet between = strict_up & down(b) & ~singleton(b);
      if (between == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_forest(const Poset& p) {
  for (Node x = 0; x < p.size(); ++x) {
    const auto below = members(p.down(x));
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        if (!p.leq(below[i], below[j]) && !p.leq(below[j], below[i])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- Forest

Forest::Forest(Poset p, std::vector<std::string> names)
    : order_(std::move(p)), names_(std::move(names)) {
  if (!is_forest(order_)) throw StructuralError("poset is not a forest");
  if (!names_.empty() && static_cast<int>(names_.size()) != order_.size()) {
    throw StructuralError("forest has " + std::to_string(order_.size()) + " nodes but " +
                          std::to_string(names_.size()) + " names");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw StructuralError("duplicate node name " + names_[i]);
    }
  }
}

Forest Forest::from_covers(int n, const std::vector<Pair>& covers,
                           std::vector<std::string> names) {
  return Forest(Poset::from_covers(n, covers), std::move(names));
}

std::string Forest::name(Node x) const {
  if (x < 0 || x >= size()) throw StructuralError("unknown node " + std::to_string(x));
  return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<Node> Forest::find(const std::string& name) const {
  for (Node x = 0; x < size(); ++x) {
    if (this->name(x) == name) return x;
  }
  return std::nullopt;
}

std::optional<Node> Forest::parent(Node x) const {
  const NodeSet strict = order_.down(x) & ~singleton(x);
  if (strict == 0) return std::nullopt;
  // The strict downset is a chain; its top is the element with the largest
  // downset.
  Node best = -1;
  for (Node y : members(strict)) {
    if (best < 0 || leq(best, y)) best = y;
  }
  return best;
}

NodeSet Forest::roots() const {
  NodeSet s = 0;
  for (Node x = 0; x < size(); ++x) {
    if (order_.down(x) == singleton(x)) s |= singleton(x);
  }
  return s;
}

NodeSet Forest::maximal() const {
  NodeSet s = 0;
  for (Node x = 0; x < size(); ++x) {
    if (order_.up(x) == singleton(x)) s |= singleton(x);
  }
  return s;
}

bool Forest::is_downset(NodeSet s) const { return down_closure(s) == s; }
bool Forest::is_upset(NodeSet s) const { return up_closure(s) == s; }

NodeSet Forest::down_closure(NodeSet s) const {
  NodeSet out = 0;
  for (Node x : members(s)) out |= order_.down(x);
  return out;
}

NodeSet Forest::up_closure(NodeSet s) const {
  NodeSet out = 0;
  for (Node x : members(s)) out |= order_.up(x);
  return out;
}

std::vector<NodeSet> downsets(const Forest& f) {
  // Walk the nodes in a linear extension; a node may join only when its
  // strict downset is already in.
  const int n = f.size();
  std::vector<Node> order(n);
  for (Node x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Node a, Node b) {
    const int ha = cardinality(f.order().down(a));
    const int hb = cardinality(f.order().down(b));
    return ha != hb ? ha < hb : a < b;
  });

  std::vector<NodeSet> out;
  auto rec = [&](auto&& self, int i, NodeSet cur) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const Node x = order[i];
    self(self, i + 1, cur);
    const NodeSet below = f.order().down(x) & ~singleton(x);
    if (subset_of(below, cur)) self(self, i + 1, cur | singleton(x));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

NodeSet principal_up(const Forest& f, Node x) {
  if (x < 0 || x >= f.size()) throw StructuralError("unknown node " + std::to_string(x));
  return f.order().up(x);
}

NodeSet principal_down(const Forest& f, Node x) {
  if (x < 0 || x >= f.size()) throw StructuralError("unknown node " + std::to_string(x));
  return f.order().down(x);
}

std::string format_set(const Forest& f, NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (Node x : members(s)) {
    if (!first) out += ",";
    out += f.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace gforest
