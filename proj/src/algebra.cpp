#include "gforest/algebra.hpp"

#include <algorithm>

#include "gforest/error.hpp"

namespace gforest {

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::lattice: return "lattice";
    case LawKind::bounds: return "bounds";
    case LawKind::distributivity: return "distributivity";
    case LawKind::residuation: return "residuation";
    case LawKind::prelinearity: return "prelinearity";
    case LawKind::box_top: return "box-top";
    case LawKind::box_meet: return "box-meet";
    case LawKind::diamond_bottom: return "diamond-bottom";
    case LawKind::diamond_join: return "diamond-join";
  }
  return "unknown";
}

std::string ViolationReport::describe() const {
  std::string w;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) w += ",";
    w += std::to_string(witness[i]);
  }
  return to_string(kind) + " violation (" + law + ") at (" + w + ")";
}

GodelAlgebra::GodelAlgebra(std::vector<std::string> names, std::vector<Elem> meet,
                           std::vector<Elem> join, std::vector<Elem> impl, Elem bot,
                           Elem top)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      impl_(std::move(impl)),
      bot_(bot),
      top_(top) {
  if (n_ == 0) throw StructuralError("algebra has no elements");
  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  auto check = [&](const std::vector<Elem>& t, const char* op) {
    if (t.size() != cells) {
      throw StructuralError(std::string(op) + " table has " + std::to_string(t.size()) +
                            " entries, expected " + std::to_string(cells));
    }
    for (Elem e : t) {
      if (e < 0 || e >= n_) {
        throw StructuralError(std::string(op) + " table entry out of range: " +
                              std::to_string(e));
      }
    }
  };
  check(meet_, "meet");
  check(join_, "join");
  check(impl_, "impl");
  if (bot_ < 0 || bot_ >= n_ || top_ < 0 || top_ >= n_) {
    throw StructuralError("bottom or top outside the carrier");
  }
}

std::optional<Elem> GodelAlgebra::find(const std::string& name) const {
  for (Elem a = 0; a < n_; ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

std::optional<ViolationReport> validate_godel(const GodelAlgebra& A) {
  const int n = A.size();
  using V = ViolationReport;
  auto fail = [](LawKind k, const char* law, std::vector<Elem> w) {
    return std::optional<V>(V{k, law, std::move(w)});
  };

  for (Elem x = 0; x < n; ++x) {
    if (A.meet(x, x) != x) return fail(LawKind::lattice, "meet-idempotence", {x});
    if (A.join(x, x) != x) return fail(LawKind::lattice, "join-idempotence", {x});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (A.meet(x, y) != A.meet(y, x)) return fail(LawKind::lattice, "meet-commutativity", {x, y});
      if (A.join(x, y) != A.join(y, x)) return fail(LawKind::lattice, "join-commutativity", {x, y});
      if (A.meet(x, A.join(x, y)) != x) return fail(LawKind::lattice, "absorption-meet", {x, y});
      if (A.join(x, A.meet(x, y)) != x) return fail(LawKind::lattice, "absorption-join", {x, y});
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (A.meet(A.meet(x, y), z) != A.meet(x, A.meet(y, z))) {
          return fail(LawKind::lattice, "meet-associativity", {x, y, z});
        }
        if (A.join(A.join(x, y), z) != A.join(x, A.join(y, z))) {
          return fail(LawKind::lattice, "join-associativity", {x, y, z});
        }
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    if (A.meet(A.bot(), x) != A.bot()) return fail(LawKind::bounds, "bottom-least", {x});
    if (A.join(A.top(), x) != A.top()) return fail(LawKind::bounds, "top-greatest", {x});
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (A.meet(x, A.join(y, z)) != A.join(A.meet(x, y), A.meet(x, z))) {
          return fail(LawKind::distributivity, "meet-over-join", {x, y, z});
        }
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (A.leq(A.meet(x, y), z) != A.leq(x, A.impl(y, z))) {
          return fail(LawKind::residuation, "meet-impl-adjunction", {x, y, z});
        }
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (A.join(A.impl(x, y), A.impl(y, x)) != A.top()) {
        return fail(LawKind::prelinearity, "prelinearity", {x, y});
      }
    }
  }
  return std::nullopt;
}

ElemSet join_irreducibles(const GodelAlgebra& A) {
  ElemSet out;
  for (Elem x = 0; x < A.size(); ++x) {
    if (x == A.bot()) continue;
    bool irreducible = true;
    for (Elem y = 0; y < A.size() && irreducible; ++y) {
      for (Elem z = 0; z < A.size(); ++z) {
        if (A.join(y, z) == x && y != x && z != x) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) out.push_back(x);
  }
  return out;
}

ElemSet principal_upset(const GodelAlgebra& A, Elem x) {
  ElemSet out;
  for (Elem y = 0; y < A.size(); ++y) {
    if (A.leq(x, y)) out.push_back(y);
  }
  return out;
}

ElemSet complement(const GodelAlgebra& A, const ElemSet& s) {
  ElemSet out;
  for (Elem y = 0; y < A.size(); ++y) {
    if (!std::binary_search(s.begin(), s.end(), y)) out.push_back(y);
  }
  return out;
}

std::vector<PrimeFilter> prime_filters(const GodelAlgebra& A) {
  std::vector<PrimeFilter> out;
  for (Elem j : join_irreducibles(A)) out.push_back({j, principal_upset(A, j)});
  return out;
}

namespace {

std::vector<char> mask_of(const GodelAlgebra& A, const ElemSet& s) {
  std::vector<char> m(A.size(), 0);
  for (Elem e : s) {
    if (e < 0 || e >= A.size()) throw StructuralError("element out of range: " + std::to_string(e));
    m[e] = 1;
  }
  return m;
}

bool up_closed(const GodelAlgebra& A, const std::vector<char>& m) {
  for (Elem x = 0; x < A.size(); ++x) {
    if (!m[x]) continue;
    for (Elem y = 0; y < A.size(); ++y) {
      if (A.leq(x, y) && !m[y]) return false;
    }
  }
  return true;
}

bool join_prime(const GodelAlgebra& A, const std::vector<char>& m) {
  for (Elem x = 0; x < A.size(); ++x) {
    for (Elem y = 0; y < A.size(); ++y) {
      if (m[A.join(x, y)] && !m[x] && !m[y]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_filter(const GodelAlgebra& A, const ElemSet& s) {
  if (s.empty()) return false;
  const auto m = mask_of(A, s);
  if (!m[A.top()]) return false;
  for (Elem x : s) {
    for (Elem y : s) {
      if (!m[A.meet(x, y)]) return false;
    }
  }
  return up_closed(A, m);
}

bool is_prime_filter(const GodelAlgebra& A, const ElemSet& s) {
  if (!is_filter(A, s)) return false;
  if (static_cast<int>(s.size()) == A.size()) return false;
  return join_prime(A, mask_of(A, s));
}

bool is_cofilter(const GodelAlgebra& A, const ElemSet& s) {
  if (s.empty()) return false;
  const auto m = mask_of(A, s);
  return up_closed(A, m) && join_prime(A, m);
}

bool is_ideal(const GodelAlgebra& A, const ElemSet& s) {
  if (s.empty()) return false;
  const auto m = mask_of(A, s);
  for (Elem x : s) {
    for (Elem y = 0; y < A.size(); ++y) {
      if (A.leq(y, x) && !m[y]) return false;
    }
    for (Elem y : s) {
      if (!m[A.join(x, y)]) return false;
    }
  }
  return true;
}

ElemSet filter_generated(const GodelAlgebra& A, const ElemSet& s) {
  if (s.empty()) throw PreconditionError("filter_generated needs a nonempty generating set");
  // In a finite lattice the generated filter is the upset of the meet.
  Elem m = A.top();
  for (Elem e : s) m = A.meet(m, e);
  return principal_upset(A, m);
}

ElemSet boolean_elements(const GodelAlgebra& A) {
  ElemSet out;
  for (Elem x = 0; x < A.size(); ++x) {
    if (A.join(x, A.neg(x)) == A.top()) out.push_back(x);
  }
  return out;
}

std::string format_elems(const GodelAlgebra& A, const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += A.name(s[i]);
  }
  return out + "}";
}

}  // namespace gforest
