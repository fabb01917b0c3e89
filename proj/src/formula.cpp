#include "qproof/formula.hpp"

#include <algorithm>
#include <string>

#include "qproof/error.hpp"

namespace qproof {

Prefix Prefix::from_blocks(std::vector<QuantifierBlock> blocks) {
  Prefix p;
  for (auto& block : blocks) {
    if (block.vars.empty()) continue;
    if (p.blocks_.empty() || p.blocks_.back().quantifier != block.quantifier) {
      p.blocks_.push_back({block.quantifier, {}});
    }
    auto& target = p.blocks_.back();
    for (Var v : block.vars) {
      if (v == 0) throw PreconditionError("variable 0 cannot be quantified");
      if (p.is_bound(v)) throw PreconditionError("variable " + std::to_string(v) + " is bound twice");
      if (v >= p.level_.size()) p.level_.resize(v + 1, 0);
      p.level_[v] = static_cast<unsigned>(p.blocks_.size());
      target.vars.push_back(v);
      ++p.num_bound_;
    }
  }
  return p;
}

Prefix Prefix::with_outer_existentials(std::span<const Var> vars) const {
  std::vector<QuantifierBlock> blocks;
  blocks.push_back({Quantifier::Existential, {vars.begin(), vars.end()}});
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  return from_blocks(std::move(blocks));
}

unsigned Prefix::level(Var v) const {
  if (!is_bound(v)) throw UnboundVariable(v);
  return level_[v];
}

Quantifier Prefix::quantifier(Var v) const { return blocks_[level(v) - 1].quantifier; }

std::vector<Var> Prefix::variables() const {
  std::vector<Var> out;
  out.reserve(num_bound_);
  for (const auto& b : blocks_) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

std::vector<Var> Prefix::existentials() const {
  std::vector<Var> out;
  for (const auto& b : blocks_) {
    if (b.quantifier == Quantifier::Existential) out.insert(out.end(), b.vars.begin(), b.vars.end());
  }
  return out;
}

std::vector<Var> Prefix::universals() const {
  std::vector<Var> out;
  for (const auto& b : blocks_) {
    if (b.quantifier == Quantifier::Universal) out.insert(out.end(), b.vars.begin(), b.vars.end());
  }
  return out;
}

QbfFormula::QbfFormula(Prefix prefix, std::vector<Clause> matrix, Var num_vars)
    : prefix_(std::move(prefix)), matrix_(std::move(matrix)), num_vars_(std::max(num_vars, prefix_.max_var())) {
  for (const auto& c : matrix_) {
    for (Literal l : c) {
      if (!prefix_.is_bound(l.var())) throw UnboundVariable(l.var());
    }
  }
}

Clause existential_subclause(const Clause& c, const Prefix& prefix) {
  std::vector<Literal> out;
  for (Literal l : c) {
    if (prefix.is_existential(l)) out.push_back(l);
  }
  return Clause(std::move(out));
}

Clause universal_subclause(const Clause& c, const Prefix& prefix) {
  std::vector<Literal> out;
  for (Literal l : c) {
    if (prefix.is_universal(l)) out.push_back(l);
  }
  return Clause(std::move(out));
}

}  // namespace qproof
