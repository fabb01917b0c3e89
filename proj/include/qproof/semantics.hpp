#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "qproof/error.hpp"
#include "qproof/formula.hpp"
#include "qproof/merge_map.hpp"

namespace qproof {

/// Partial assignment of truth values, indexed by variable.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var max_var) : values_(max_var + 1, kUnassigned) {}

  void set(Var v, bool value);
  void set(Literal l) { set(l.var(), l.positive()); }
  void unset(Var v);
  std::optional<bool> get(Var v) const;
  bool is_assigned(Var v) const { return v < values_.size() && values_[v] != kUnassigned; }
  bool satisfies(Literal l) const;
  bool falsifies(Literal l) const;

 private:
  static constexpr std::int8_t kUnassigned = -1;
  std::vector<std::int8_t> values_;
};

class IncompleteAssignment : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A strategy contract violation: the decision for a universal reads a
/// variable that is universal or not to its left. Distinct from "this
/// strategy does not win".
class StrategyContractError : public Error {
 public:
  using Error::Error;
};

/// Explicit decision function: outputs[k] is the label for the input row
/// whose bit i is the value of inputs[i].
struct TruthTable {
  std::vector<Var> inputs;
  std::vector<LeafLabel> outputs;
};

using Decision = std::variant<MergeMap, TruthTable>;

/// One decision function per universal variable.
using UniversalStrategy = std::map<Var, Decision>;

struct OracleOptions {
  std::size_t max_vars = 24;
};

/// True iff every clause has a satisfied literal. Throws
/// IncompleteAssignment if some prefix variable is unassigned.
bool evaluate(const QbfFormula& f, const Assignment& a);

/// Exact truth value by game-tree recursion over the prefix order.
/// Throws OracleCapExceeded above `options.max_vars` bound variables.
bool brute_force_truth(const QbfFormula& f, OracleOptions options = {});

/// Decision value of `d` under `a`; don't-care resolves to false.
bool decide(const Decision& d, const Assignment& a);

/// True iff every total existential assignment, completed by the strategy,
/// falsifies the matrix. Throws StrategyContractError on contract
/// violations and OracleCapExceeded when there are too many existentials.
bool verify_countermodel(const QbfFormula& f, const UniversalStrategy& s, OracleOptions options = {});

}  // namespace qproof
