#pragma once

// Goedel algebras with a box and a diamond operator.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gforest/algebra.hpp"
#include "gforest/duality.hpp"
#include "gforest/order.hpp"

namespace gforest {

struct Gao {
  GodelAlgebra algebra;
  std::vector<Elem> box;
  std::vector<Elem> diamond;

  friend bool operator==(const Gao&, const Gao&) = default;
};

/// Checks box(top)=top, box preserves meets, diamond(bot)=bot, diamond
/// preserves joins, in that order. Throws StructuralError if an operator
/// table is not total.
std::optional<ViolationReport> validate_gao(const Gao& g);

struct InducedRelations {
  Spectrum spec;
  Rel rbox;
  Rel rdia;
  Rel ra;  // rbox & rdia
};

InducedRelations induced_relations(const Gao& g);

/// {y | every R-successor of y lies in a}. Throws PreconditionError if the
/// result is not a downset of f.
NodeSet beta(const Forest& f, const Rel& r, NodeSet a);
/// {y | some R-successor of y lies in a}. Same error contract as beta.
NodeSet delta(const Forest& f, const Rel& r, NodeSet a);

/// GAO on the downsets of f with box = beta over rbox and diamond = delta
/// over rdia. Only requires the outputs to be downsets.
struct ComplexGao {
  Gao gao;
  std::vector<NodeSet> sets;
};

ComplexGao complex_algebra(const Forest& f, const Rel& rbox, const Rel& rdia);

struct RepresentationReport {
  bool iso_ok = true;
  bool base_ok = true;
  std::optional<bool> dunn_ok;  // set when the input satisfies D1 and D2
  std::optional<bool> fs_ok;    // set when the input satisfies FS1 and FS2
  std::vector<std::string> failures;

  bool ok() const {
    return iso_ok && base_ok && dunn_ok.value_or(true) && fs_ok.value_or(true);
  }
};

RepresentationReport verify_representation(const Gao& g);

/// A variety membership verdict. Witnesses are all violating tuples in
/// lexicographic order of element indices.
struct Flag {
  bool holds = true;
  std::string failed_law;
  std::vector<std::vector<Elem>> witnesses;
};

struct VarietyFlags {
  Flag gao, d1, d2, fs1, fs2, bb, db, dgao, fsgao, fsdgao, wgao, bao;

  /// Name/flag pairs in a fixed display order.
  std::vector<std::pair<std::string, const Flag*>> entries() const;
};

VarietyFlags classify(const Gao& g);

/// True iff box and diamond map Boolean elements to Boolean elements.
bool boolean_image_check(const Gao& g);

/// For every prime filter f: box^-1(f) is a filter and diamond^-1(f) is a
/// cofilter. Returns the first failing generator, if any.
std::optional<Elem> preimage_check(const Gao& g);

/// Elements a with op(a) in f.
ElemSet preimage(const GodelAlgebra& a, const std::vector<Elem>& op, const ElemSet& f);

}  // namespace gforest
