#pragma once

// Exhaustive enumeration of small forests, frames and GAOs, with a theorem
// harness and counterexample hunts on top.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gforest/frames.hpp"
#include "gforest/modal.hpp"
#include "gforest/order.hpp"

namespace gforest {

struct Budget {
  int forest_nodes = 5;  // enum_forests
  int frame_nodes = 4;   // frame enumeration
  int gao_nodes = 3;     // GAO enumeration and theorem runs
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Defaults, with every cap replaced by GF_MAX_NODES when that is set to a
  /// positive integer.
  static Budget from_env();
  void set_timeout(std::chrono::milliseconds ms);
  /// Throws BudgetError once the deadline has passed.
  void tick() const;
};

/// Non-isomorphic forests on n nodes, parents numbered before children.
/// Throws BudgetError if n exceeds the budget.
std::vector<Forest> enum_forests(int n, const Budget& budget = {});

enum class FrameConstraint { any, forest, OR, P };
enum class Dedup { none, tables, iso };

std::string to_string(FrameConstraint c);
std::optional<FrameConstraint> parse_constraint(const std::string& s);
std::optional<Dedup> parse_dedup(const std::string& s);

/// Visitors return false to stop the enumeration early. The enumerators
/// return false when stopped that way.
using TwoRelVisitor = std::function<bool(const TwoRelFrame&)>;
using OneRelVisitor = std::function<bool(const OneRelFrame&)>;

/// Frames (F, rbox, rdia) meeting the constraint, box relation major.
/// Dedup by tables keeps one frame per complex GAO up to automorphisms of F
/// (not available for FrameConstraint::any); dedup by iso keeps one frame per
/// isomorphism class.
bool enum_two_rel_frames(const Forest& f, FrameConstraint c, Dedup d, const Budget& budget,
                         const TwoRelVisitor& visit);

/// Relations in increasing row-mask order that put (F, R) in the class.
bool enum_one_rel_frames(const Forest& f, OneRelClass c, const Budget& budget,
                         const OneRelVisitor& visit);

/// Every relation on F, for checks quantified over all one-relation frames.
bool enum_all_one_rel_frames(const Forest& f, const Budget& budget, const OneRelVisitor& visit);

struct GaoInstance {
  TwoRelFrame frame;  // a forest frame whose complex algebra is gao
  Gao gao;
  std::vector<NodeSet> sets;  // downset of each element
};

using GaoVisitor = std::function<bool(const GaoInstance&)>;

/// Complex GAOs of all forest frames on forests with 1..n_max nodes, one per
/// operator-table class under forest automorphisms.
bool enum_gaos(int n_max, const Budget& budget, const GaoVisitor& visit);

struct Witness {
  std::string description;
  std::optional<Gao> gao;
  std::optional<TwoRelFrame> two_rel;
  std::optional<OneRelFrame> one_rel;
  int size = 0;  // forest nodes
};

struct TheoremReport {
  std::string id;
  std::string statement;
  int n_max = 0;
  long instances = 0;
  bool passed = true;
  std::optional<Witness> counterexample;
};

struct TheoremInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string statement;
};

const std::vector<TheoremInfo>& theorem_catalog();
/// Canonical id for an id or alias.
std::optional<std::string> resolve_theorem(const std::string& name);

/// Throws PreconditionError for an unknown id, BudgetError past the budget.
TheoremReport verify_theorem(const std::string& id, int n_max, const Budget& budget);

struct HuntReport {
  std::string property;
  std::string statement;
  bool found = false;
  long searched = 0;
  std::optional<Witness> witness;
};

struct PropertyInfo {
  std::string id;
  std::string statement;
};

const std::vector<PropertyInfo>& property_catalog();

/// Searches sizes 1..n_max in order and stops at the first instance where
/// the property fails. Throws PreconditionError for an unknown property.
HuntReport find_counterexample(const std::string& property, int n_max, const Budget& budget);

}  // namespace gforest
