#pragma once

// Finite Goedel algebras given by operation tables.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gforest {

using Elem = int;
/// Sorted list of distinct element identifiers.
using ElemSet = std::vector<Elem>;

enum class LawKind {
  lattice,
  bounds,
  distributivity,
  residuation,
  prelinearity,
  box_top,
  box_meet,
  diamond_bottom,
  diamond_join,
};

std::string to_string(LawKind k);

/// The first law found violated, with the offending element tuple.
struct ViolationReport {
  LawKind kind;
  std::string law;  // e.g. "meet-associativity"
  std::vector<Elem> witness;

  std::string describe() const;
};

/// Operation tables over elements 0..n-1. Tables are row-major:
/// meet(a,b) = meet_table[a*n+b]. The order is derived from meet.
class GodelAlgebra {
 public:
  GodelAlgebra() = default;
  /// Throws StructuralError if a table is not total over the carrier or an
  /// entry is out of range. Does not check the algebraic laws; see
  /// validate_godel.
  GodelAlgebra(std::vector<std::string> names, std::vector<Elem> meet,
               std::vector<Elem> join, std::vector<Elem> impl, Elem bot, Elem top);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem a) const { return names_.at(a); }
  std::optional<Elem> find(const std::string& name) const;

  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem impl(Elem a, Elem b) const { return impl_[a * n_ + b]; }
  Elem neg(Elem a) const { return impl(a, bot_); }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }

  const std::vector<Elem>& meet_table() const { return meet_; }
  const std::vector<Elem>& join_table() const { return join_; }
  const std::vector<Elem>& impl_table() const { return impl_; }

  /// Structural equality: same names and tables.
  friend bool operator==(const GodelAlgebra&, const GodelAlgebra&) = default;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Elem> meet_, join_, impl_;
  Elem bot_ = 0, top_ = 0;
};

/// Checks lattice, bounds, distributivity, residuation and prelinearity in
/// that order and reports the first violation.
std::optional<ViolationReport> validate_godel(const GodelAlgebra& a);

/// Nonbottom x such that x = y v z forces x = y or x = z.
ElemSet join_irreducibles(const GodelAlgebra& a);

struct PrimeFilter {
  Elem generator;
  ElemSet members;
};

/// One principal filter per join-irreducible, in element order.
std::vector<PrimeFilter> prime_filters(const GodelAlgebra& a);

bool is_filter(const GodelAlgebra& a, const ElemSet& s);
bool is_prime_filter(const GodelAlgebra& a, const ElemSet& s);
bool is_cofilter(const GodelAlgebra& a, const ElemSet& s);
bool is_ideal(const GodelAlgebra& a, const ElemSet& s);

/// Smallest filter containing s. Throws PreconditionError on empty s.
ElemSet filter_generated(const GodelAlgebra& a, const ElemSet& s);

/// {x | x v neg(x) = top}.
ElemSet boolean_elements(const GodelAlgebra& a);

ElemSet principal_upset(const GodelAlgebra& a, Elem x);
ElemSet complement(const GodelAlgebra& a, const ElemSet& s);

/// Element names joined as "{a,b}".
std::string format_elems(const GodelAlgebra& a, const ElemSet& s);

}  // namespace gforest
