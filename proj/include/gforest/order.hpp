#pragma once

// Finite posets, forests, downsets and binary relations.
//
// Nodes are the integers 0..n-1 and node sets are bitmasks, so carriers are
// capped at 64 nodes. That is far beyond anything the exhaustive searches can
// touch.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gforest {

using Node = int;
using NodeSet = std::uint64_t;

inline constexpr int kMaxNodes = 64;

constexpr NodeSet singleton(Node x) { return NodeSet{1} << x; }
constexpr bool contains(NodeSet s, Node x) { return (s >> x) & 1U; }
constexpr bool subset_of(NodeSet a, NodeSet b) { return (a & ~b) == 0; }
constexpr int cardinality(NodeSet s) { return std::popcount(s); }
constexpr NodeSet full_set(int n) {
  return n >= 64 ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
}

/// Members of a node set in increasing order.
std::vector<Node> members(NodeSet s);
NodeSet from_members(const std::vector<Node>& nodes);

/// Canonical order on node sets: by cardinality, then lexicographically on
/// the sorted member lists.
bool canonical_less(NodeSet a, NodeSet b);

using Pair = std::pair<Node, Node>;

/// A binary relation on {0..n-1}, stored as one successor mask per node.
class Rel {
 public:
  Rel() = default;
  explicit Rel(int n);
  Rel(int n, const std::vector<Pair>& pairs);

  static Rel identity(int n);
  static Rel full(int n);

  int size() const { return n_; }
  NodeSet row(Node a) const { return rows_.at(a); }
  void set_row(Node a, NodeSet s) { rows_.at(a) = s; }
  bool has(Node a, Node b) const { return contains(rows_.at(a), b); }
  void add(Node a, Node b);
  std::size_t pair_count() const;

  /// Pairs in lexicographic order.
  std::vector<Pair> pairs() const;
  Rel converse() const;

  friend bool operator==(const Rel&, const Rel&) = default;
  friend bool operator<(const Rel& a, const Rel& b) { return a.rows_ < b.rows_; }

 private:
  int n_ = 0;
  std::vector<NodeSet> rows_;
};

/// Left-to-right composition: (a,c) is in the result iff (a,b) in s and
/// (b,c) in t for some b. Throws StructuralError on carrier mismatch.
Rel compose(const Rel& s, const Rel& t);
Rel compose(const Rel& r, const Rel& s, const Rel& t);
Rel intersect(const Rel& s, const Rel& t);
Rel unite(const Rel& s, const Rel& t);
bool included(const Rel& s, const Rel& t);
/// Pairs of s missing from t, lexicographic.
std::vector<Pair> difference(const Rel& s, const Rel& t);

/// A finite partial order stored as its full reflexive relation.
class Poset {
 public:
  Poset() = default;
  /// Throws StructuralError unless leq is reflexive, antisymmetric and
  /// transitive.
  explicit Poset(Rel leq);

  /// Reflexive-transitive closure of the given covers.
  static Poset from_covers(int n, const std::vector<Pair>& covers);

  int size() const { return leq_.size(); }
  bool leq(Node a, Node b) const { return leq_.has(a, b); }
  const Rel& leq_rel() const { return leq_; }
  const Rel& geq_rel() const { return geq_; }
  NodeSet up(Node x) const { return leq_.row(x); }
  NodeSet down(Node x) const { return geq_.row(x); }
  /// Hasse covers, derived on demand.
  std::vector<Pair> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.leq_ == b.leq_; }

 private:
  Rel leq_;
  Rel geq_;
};

bool is_forest(const Poset& p);

/// A poset whose principal downsets are chains, with optional node names.
class Forest {
 public:
  Forest() = default;
  /// Throws StructuralError if p is not a forest or names has the wrong size.
  explicit Forest(Poset p, std::vector<std::string> names = {});
  static Forest from_covers(int n, const std::vector<Pair>& covers,
                            std::vector<std::string> names = {});

  int size() const { return order_.size(); }
  NodeSet carrier() const { return full_set(size()); }
  const Poset& order() const { return order_; }
  bool leq(Node a, Node b) const { return order_.leq(a, b); }
  const Rel& leq_rel() const { return order_.leq_rel(); }
  const Rel& geq_rel() const { return order_.geq_rel(); }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name: the given name or the decimal index.
  std::string name(Node x) const;
  std::optional<Node> find(const std::string& name) const;

  /// Unique lower cover, if any.
  std::optional<Node> parent(Node x) const;
  NodeSet roots() const;
  NodeSet maximal() const;

  bool is_downset(NodeSet s) const;
  bool is_upset(NodeSet s) const;
  NodeSet down_closure(NodeSet s) const;
  NodeSet up_closure(NodeSet s) const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  Poset order_;
  std::vector<std::string> names_;
};

/// All downward-closed subsets in canonical order.
std::vector<NodeSet> downsets(const Forest& f);

/// {y | y >= x}. Throws StructuralError for an unknown node.
NodeSet principal_up(const Forest& f, Node x);
/// {y | y <= x}. Throws StructuralError for an unknown node.
NodeSet principal_down(const Forest& f, Node x);

/// Renders a node set as "{a,b}" using the forest's names.
std::string format_set(const Forest& f, NodeSet s);

}  // namespace gforest
