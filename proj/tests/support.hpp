#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gforest/io.hpp"

namespace gforest::testing {

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

template <typename T>
T load(const std::string& name) {
  return std::get<T>(read_document(fixture(name)));
}

// Parent-pointer forest: node i > 0 picks a parent among 0..i-1 or none.
inline Forest random_forest(std::mt19937& rng, int n) {
  std::vector<Pair> covers;
  for (Node i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(-1, i - 1);
    const int p = pick(rng);
    if (p >= 0) covers.emplace_back(p, i);
  }
  return Forest::from_covers(n, covers);
}

inline Rel random_rel(std::mt19937& rng, int n, double density = 0.35) {
  std::bernoulli_distribution coin(density);
  Rel r(n);
  for (Node a = 0; a < n; ++a) {
    for (Node b = 0; b < n; ++b) {
      if (coin(rng)) r.add(a, b);
    }
  }
  return r;
}

// Pairwise definition of composition, independent of the row masks.
inline Rel naive_compose(const Rel& s, const Rel& t) {
  const int n = s.size();
  Rel out(n);
  for (Node a = 0; a < n; ++a) {
    for (Node b = 0; b < n; ++b) {
      for (Node c = 0; c < n; ++c) {
        if (s.has(a, b) && t.has(b, c)) out.add(a, c);
      }
    }
  }
  return out;
}

// Heyting algebra of the downsets of any poset, built from the set-theoretic
// definitions: x -> y is the union of all downsets inside (P \ x) | y.
inline GodelAlgebra downset_heyting(const Poset& p, std::vector<NodeSet>* sets_out = nullptr) {
  const int n = p.size();
  std::vector<NodeSet> sets;
  for (NodeSet s = 0; s <= full_set(n); ++s) {
    bool down = true;
    for (Node y = 0; y < n && down; ++y) {
      if (contains(s, y) && !subset_of(p.down(y), s)) down = false;
    }
    if (down) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  const int m = static_cast<int>(sets.size());
  auto index = [&](NodeSet s) {
    return static_cast<Elem>(std::find(sets.begin(), sets.end(), s) - sets.begin());
  };
  std::vector<Elem> meet, join, impl;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back("e" + std::to_string(i));
    for (int j = 0; j < m; ++j) {
      meet.push_back(index(sets[i] & sets[j]));
      join.push_back(index(sets[i] | sets[j]));
      const NodeSet allowed = (full_set(n) & ~sets[i]) | sets[j];
      NodeSet u = 0;
      for (NodeSet d : sets) {
        if (subset_of(d, allowed)) u |= d;
      }
      impl.push_back(index(u));
    }
  }
  if (sets_out) *sets_out = sets;
  return GodelAlgebra(names, meet, join, impl, 0, m - 1);
}

}  // namespace gforest::testing
