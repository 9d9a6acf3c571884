#pragma once

// Finite Goedel duality between algebras and forests.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gforest/algebra.hpp"
#include "gforest/order.hpp"

namespace gforest {

/// The forest of prime filters. Node i is the filter generated by
/// generators[i]; nodes carry the generator's element name.
struct Spectrum {
  Forest forest;
  ElemSet generators;
};

/// Throws TheoremViolation if the resulting order is not a forest.
Spectrum spectrum(const GodelAlgebra& a);

/// The algebra of downsets of f. Element i is sets[i]; sets are in canonical
/// order, so element 0 is the empty set and the last is the carrier.
struct DownsetAlgebra {
  GodelAlgebra algebra;
  std::vector<NodeSet> sets;

  /// Element whose downset is s. Throws PreconditionError if s is not a
  /// downset.
  Elem index_of(NodeSet s) const;
};

DownsetAlgebra downset_algebra(const Forest& f);

/// r(x) = {j <= x} as a node set of spectrum(a), indexed by element.
std::vector<NodeSet> stone_map(const GodelAlgebra& a, const Spectrum& s);
std::vector<NodeSet> stone_map(const GodelAlgebra& a);

/// Reasons r fails to be an isomorphism onto the downset algebra of s;
/// empty when it is one.
std::vector<std::string> stone_failures(const GodelAlgebra& a, const Spectrum& s);

/// k(x) = {downsets containing x}, one element set of downset_algebra(f)
/// per node.
std::vector<ElemSet> point_map(const Forest& f);

/// k as a node map F -> spectrum(downset_algebra(f)).
std::vector<Node> point_map_nodes(const Forest& f);

using ElemMap = std::vector<Elem>;

/// First isomorphism a -> b in canonical order, if any.
std::optional<ElemMap> algebra_iso(const GodelAlgebra& a, const GodelAlgebra& b);

/// Calls visit for every isomorphism a -> b in canonical order until it
/// returns false.
void for_each_algebra_iso(const GodelAlgebra& a, const GodelAlgebra& b,
                          const std::function<bool(const ElemMap&)>& visit);

using NodeMap = std::vector<Node>;

/// First order-isomorphism f1 -> f2 carrying each rels1[i] onto rels2[i].
std::optional<NodeMap> frame_iso(const Forest& f1, const std::vector<Rel>& rels1,
                                 const Forest& f2, const std::vector<Rel>& rels2);

/// Calls visit for every order automorphism of f until it returns false.
void for_each_automorphism(const Forest& f, const std::function<bool(const NodeMap&)>& visit);

/// Image of r under the node map m.
Rel map_rel(const Rel& r, const NodeMap& m);

}  // namespace gforest
