#pragma once

// Forest frames with two relations or one, their classes and transforms.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gforest/duality.hpp"
#include "gforest/modal.hpp"
#include "gforest/order.hpp"

namespace gforest {

struct TwoRelFrame {
  Forest forest;
  Rel rbox;
  Rel rdia;

  friend bool operator==(const TwoRelFrame&, const TwoRelFrame&) = default;
};

struct OneRelFrame {
  Forest forest;
  Rel r;

  friend bool operator==(const OneRelFrame&, const OneRelFrame&) = default;
};

/// An inclusion or equality between relations. Witnesses are the pairs on
/// the wrong side, in lexicographic order.
struct Condition {
  bool holds = true;
  std::vector<Pair> witnesses;
};

struct TwoRelFlags {
  Condition M, A, OR1, OR2, P1, P2;

  bool forest_frame() const { return M.holds && A.holds; }
  bool or_frame() const { return OR1.holds && OR2.holds; }
  bool p_frame() const { return P1.holds && P2.holds; }
  std::vector<std::pair<std::string, const Condition*>> entries() const;
};

struct OneRelFlags {
  Condition CJ1, CJ2, FS1f, FS2f, FSCJ2, W1, W2, basic;

  bool cj() const { return CJ1.holds && CJ2.holds; }
  bool fs() const { return FS1f.holds && FS2f.holds; }
  bool fsd() const { return FS1f.holds && FS2f.holds && CJ2.holds; }
  bool w() const { return W1.holds && W2.holds; }
  std::vector<std::pair<std::string, const Condition*>> entries() const;
};

enum class OneRelClass { CJ, FS, FSD, W, basic };

std::string to_string(OneRelClass c);
/// Accepts "CJ", "FS", "FSD", "W", "basic" in any case.
std::optional<OneRelClass> parse_one_rel_class(const std::string& s);

bool in_class(const OneRelFlags& f, OneRelClass c);

/// Throws StructuralError if a relation does not live on the forest.
TwoRelFlags classify_two_rel(const TwoRelFrame& fr);
OneRelFlags classify_one_rel(const OneRelFrame& fr);

/// (F, rbox o >=, rdia o <=). Throws PreconditionError unless fr is a forest
/// frame.
TwoRelFrame prime_transform(const TwoRelFrame& fr);
/// (F, >= o rbox, <= o rdia). Throws PreconditionError unless fr is a P-frame.
TwoRelFrame second_transform(const TwoRelFrame& fr);

/// Complex algebra of a forest frame. Throws PreconditionError otherwise.
ComplexGao complex_gao(const TwoRelFrame& fr);

/// Named boolean outcomes of the checks attached to an operation.
using CheckList = std::vector<std::pair<std::string, bool>>;

inline bool all_pass(const CheckList& c) {
  for (const auto& [name, ok] : c) {
    if (!ok) return false;
  }
  return true;
}

struct OneRelTransform {
  OneRelFrame frame;
  CheckList checks;
};

/// CJ: R' = (R o >=) & (R o <=). FS and FSD: R' = (>= o R) & (R o <=).
/// Throws PreconditionError if fr is not in the class or the class is W or
/// basic.
OneRelTransform one_rel_transform(const OneRelFrame& fr, OneRelClass c);

/// R' = R o >= for a W-frame, with the W and FS flags of the result checked.
OneRelTransform w_transform(const OneRelFrame& fr);

/// Box relation used by the complex algebra of a one-relation frame:
/// >= o R for FS, R otherwise.
Rel one_rel_box(const OneRelFrame& fr, OneRelClass c);

struct OneRelComplex {
  ComplexGao complex;
  CheckList checks;  // expected variety flags
};

/// Throws PreconditionError if fr is not in the class or the class is basic.
OneRelComplex complex_one_rel(const OneRelFrame& fr, OneRelClass c);

struct RoundtripReport {
  bool ok = false;
  Rel expected;        // relation that should be recovered, on the input forest
  Forest dual_forest;  // spectrum of the complex algebra
  Rel dual_relation;   // its induced single relation
  std::optional<NodeMap> iso;
  CheckList checks;
};

/// Dualizes the complex algebra back to a one-relation frame and looks for
/// an isomorphism with (F, R) for FS and FSD, or (F, R') for CJ.
RoundtripReport dual_one_rel_roundtrip(const OneRelFrame& fr, OneRelClass c);

struct FrameAxiomReport {
  bool d1_frame = false, d1_algebra = false;
  bool d2_frame = false, d2_algebra = false;
  bool fs2_frame = false, fs2_algebra = false;
  CheckList key_transfer;

  bool consistent() const {
    return d1_frame == d1_algebra && d2_frame == d2_algebra && fs2_frame == fs2_algebra &&
           all_pass(key_transfer);
  }
};

/// Frame-side characterizations of D1, D2 and FS2 compared against the
/// equational flags of the complex algebra, plus the transfer of both
/// relations along the point map. Throws PreconditionError unless fr is a
/// forest frame.
FrameAxiomReport frame_side_axiom_check(const TwoRelFrame& fr);

/// True iff beta over b1 equals beta over b2 and delta over d1 equals delta
/// over d2 on every downset of f.
bool same_operators(const Forest& f, const Rel& b1, const Rel& d1, const Rel& b2, const Rel& d2);

/// Condition helpers over a forest's order.
Condition inclusion(const Rel& lhs, const Rel& rhs);
Condition equality(const Rel& lhs, const Rel& rhs);

}  // namespace gforest
