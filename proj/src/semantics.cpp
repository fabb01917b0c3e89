#include "qproof/semantics.hpp"

#include <string>

namespace qproof {

void Assignment::set(Var v, bool value) {
  if (v >= values_.size()) values_.resize(v + 1, kUnassigned);
  values_[v] = value ? 1 : 0;
}

void Assignment::unset(Var v) {
  if (v < values_.size()) values_[v] = kUnassigned;
}

std::optional<bool> Assignment::get(Var v) const {
  if (!is_assigned(v)) return std::nullopt;
  return values_[v] == 1;
}

bool Assignment::satisfies(Literal l) const {
  auto v = get(l.var());
  return v && *v == l.positive();
}

bool Assignment::falsifies(Literal l) const {
  auto v = get(l.var());
  return v && *v != l.positive();
}

bool evaluate(const QbfFormula& f, const Assignment& a) {
  for (Var v : f.prefix().variables()) {
    if (!a.is_assigned(v)) throw IncompleteAssignment("variable " + std::to_string(v) + " is unassigned");
  }
  for (const auto& c : f.matrix()) {
    bool satisfied = false;
    for (Literal l : c) {
      if (a.satisfies(l)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

namespace {

// Game-tree recursion with incremental clause counters: a node is decided
// as soon as some clause is falsified or every clause is satisfied.
class GameTree {
 public:
  explicit GameTree(const QbfFormula& f) : f_(f) {
    const Var max_var = f.prefix().max_var();
    occurs_.resize(2 * (max_var + 1));
    const auto matrix = f.matrix();
    unsatisfied_lits_.resize(matrix.size());
    true_lits_.assign(matrix.size(), 0);
    std::vector<bool> used(max_var + 1, false);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      unsatisfied_lits_[i] = static_cast<int>(matrix[i].size());
      if (matrix[i].empty()) ++falsified_;
      for (Literal l : matrix[i]) {
        occurs_[l.code()].push_back(i);
        used[l.var()] = true;
      }
    }
    for (Var v : f.prefix().variables()) {
      if (used[v]) order_.push_back(v);
    }
  }

  bool solve(std::size_t depth) {
    if (falsified_ > 0) return false;
    if (satisfied_ == f_.matrix().size() || depth == order_.size()) return true;
    const Var v = order_[depth];
    const bool existential = f_.prefix().is_existential(v);
    for (bool value : {false, true}) {
      assign(Literal(v, !value), +1);
      const bool result = solve(depth + 1);
      assign(Literal(v, !value), -1);
      if (existential && result) return true;
      if (!existential && !result) return false;
    }
    return !existential;
  }

 private:
  // Applies (delta = +1) or retracts (delta = -1) making `l` true.
  void assign(Literal l, int delta) {
    for (std::size_t c : occurs_[l.code()]) {
      if (delta > 0 && true_lits_[c]++ == 0) ++satisfied_;
      if (delta < 0 && --true_lits_[c] == 0) --satisfied_;
    }
    for (std::size_t c : occurs_[(~l).code()]) {
      unsatisfied_lits_[c] -= delta;
      const bool now_false = unsatisfied_lits_[c] == 0 && true_lits_[c] == 0;
      if (delta > 0 && now_false) ++falsified_;
      if (delta < 0 && unsatisfied_lits_[c] == 1 && true_lits_[c] == 0) --falsified_;
    }
  }

  const QbfFormula& f_;
  std::vector<Var> order_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<int> unsatisfied_lits_;  // literals not yet falsified
  std::vector<int> true_lits_;
  std::size_t satisfied_ = 0;
  std::size_t falsified_ = 0;
};

}  // namespace

bool brute_force_truth(const QbfFormula& f, OracleOptions options) {
  if (f.prefix().num_bound() > options.max_vars) {
    throw OracleCapExceeded("formula has " + std::to_string(f.prefix().num_bound()) + " variables, cap is " +
                            std::to_string(options.max_vars));
  }
  GameTree tree(f);
  return tree.solve(0);
}

bool decide(const Decision& d, const Assignment& a) {
  if (const auto* m = std::get_if<MergeMap>(&d)) return evaluate_map(*m, a) == LeafLabel::Positive;
  const auto& table = std::get<TruthTable>(d);
  if (table.outputs.size() != (std::size_t{1} << table.inputs.size())) {
    throw StrategyContractError("truth table size does not match its inputs");
  }
  std::size_t row = 0;
  for (std::size_t i = 0; i < table.inputs.size(); ++i) {
    auto value = a.get(table.inputs[i]);
    if (!value) throw IncompleteAssignment("decision input " + std::to_string(table.inputs[i]) + " unassigned");
    if (*value) row |= std::size_t{1} << i;
  }
  return table.outputs[row] == LeafLabel::Positive;
}

namespace {

void check_contract(const Prefix& prefix, Var u, const Decision& d) {
  std::vector<Var> inputs;
  if (const auto* m = std::get_if<MergeMap>(&d)) {
    inputs = m->branch_variables();
  } else {
    const auto& table = std::get<TruthTable>(d);
    if (table.inputs.size() > 30 || table.outputs.size() != (std::size_t{1} << table.inputs.size())) {
      throw StrategyContractError("truth table for " + std::to_string(u) + " has the wrong number of rows");
    }
    inputs = table.inputs;
  }
  for (Var x : inputs) {
    if (!prefix.is_bound(x)) {
      throw StrategyContractError("decision for " + std::to_string(u) + " reads unbound variable " +
                                  std::to_string(x));
    }
    if (prefix.is_universal(x)) {
      throw StrategyContractError("decision for " + std::to_string(u) + " reads universal variable " +
                                  std::to_string(x));
    }
    if (prefix.level(x) >= prefix.level(u)) {
      throw StrategyContractError("decision for " + std::to_string(u) + " reads variable " + std::to_string(x) +
                                  " which is not to its left");
    }
  }
}

}  // namespace

bool verify_countermodel(const QbfFormula& f, const UniversalStrategy& s, OracleOptions options) {
  const Prefix& prefix = f.prefix();
  const auto universals = prefix.universals();
  const auto existentials = prefix.existentials();
  for (const auto& [u, d] : s) {
    if (!prefix.is_bound(u) || !prefix.is_universal(u)) {
      throw StrategyContractError("strategy entry for non-universal variable " + std::to_string(u));
    }
  }
  for (Var u : universals) {
    auto it = s.find(u);
    if (it == s.end()) throw StrategyContractError("no decision for universal variable " + std::to_string(u));
    check_contract(prefix, u, it->second);
  }
  if (existentials.size() > options.max_vars) {
    throw OracleCapExceeded("formula has " + std::to_string(existentials.size()) +
                            " existential variables, cap is " + std::to_string(options.max_vars));
  }

  Assignment a(prefix.max_var());
  const std::uint64_t rows = std::uint64_t{1} << existentials.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < existentials.size(); ++i) a.set(existentials[i], (row >> i) & 1u);
    for (Var u : universals) a.set(u, decide(s.at(u), a));
    if (evaluate(f, a)) return false;
  }
  return true;
}

}  // namespace qproof
