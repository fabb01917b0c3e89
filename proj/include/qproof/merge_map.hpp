#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "qproof/error.hpp"
#include "qproof/literal.hpp"

namespace qproof {

class Assignment;

using LineIndex = std::uint32_t;

/// Leaf label of a merge map: the value the universal variable takes
/// (Positive = u, Negative = not u) or don't-care.
enum class LeafLabel : std::uint8_t { Positive, Negative, DontCare };

char to_char(LeafLabel label);

struct Leaf {
  LeafLabel label;
  bool operator==(const Leaf&) const = default;
};

/// "if var = 0 goto low else goto high"
struct Branch {
  Var var;
  LineIndex low;
  LineIndex high;
  bool operator==(const Branch&) const = default;
};

using Rule = std::variant<Leaf, Branch>;

class MergeMapError : public Error {
 public:
  using Error::Error;
};

/// Deterministic branching program over existential variables, indexed by
/// proof line numbers. Every branch points at strictly smaller indices, so
/// the graph is acyclic. Rules are kept sorted by index.
class MergeMap {
 public:
  using Entry = std::pair<LineIndex, Rule>;

  /// The single-rule map {index -> label}.
  static MergeMap leaf(LineIndex index, LeafLabel label);

  /// Validates: root present, children present and strictly smaller than
  /// their parent, no duplicate indices. Throws MergeMapError.
  static MergeMap from_rules(LineIndex root, std::vector<Entry> rules);

  LineIndex root() const { return root_; }
  std::span<const Entry> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  LineIndex max_index() const { return rules_.back().first; }

  const Rule* find(LineIndex index) const;
  const Rule& at(LineIndex index) const;

  /// A map consisting of a single don't-care leaf.
  bool is_trivial() const;

  /// Branch variables reachable from the root, sorted and deduplicated.
  std::vector<Var> branch_variables() const;

  bool operator==(const MergeMap& other) const { return root_ == other.root_ && rules_ == other.rules_; }

 private:
  friend MergeMap merge(const MergeMap&, const MergeMap&, LineIndex, Var);
  friend bool is_isomorphic(const MergeMap&, const MergeMap&);
  MergeMap() = default;

  static constexpr std::uint32_t kNone = UINT32_MAX;
  std::uint32_t position(LineIndex index) const;
  // Fills children_ from rules_.
  void link();

  LineIndex root_ = 0;
  std::vector<Entry> rules_;
  // Positions in rules_ of each branch's low and high child.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> children_;
};

/// Walks from the root taking `low` when the branch variable is false.
/// Throws MergeMapError when a branch variable is unassigned.
LeafLabel evaluate_map(const MergeMap& m, const Assignment& a);

/// True iff a line-index bijection maps one reachable graph onto the other
/// with matching branch variables and leaf labels. Linear time.
bool is_isomorphic(const MergeMap& a, const MergeMap& b);

/// True iff both maps have identical rules on every shared line index.
bool is_consistent(const MergeMap& a, const MergeMap& b);

/// `a` unless it is trivial, then `b`; empty when the maps are neither
/// isomorphic nor is either of them trivial.
std::optional<MergeMap> try_select(const MergeMap& a, const MergeMap& b);
MergeMap select(const MergeMap& a, const MergeMap& b);

/// Union of both rule tables plus `index -> (var, root(a), root(b))`.
/// Throws MergeMapError if the maps are inconsistent or `index` is not
/// larger than every index already present.
MergeMap merge(const MergeMap& a, const MergeMap& b, LineIndex index, Var var);

}  // namespace qproof
