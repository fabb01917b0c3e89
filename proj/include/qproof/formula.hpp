#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qproof/literal.hpp"

namespace qproof {

enum class Quantifier : std::uint8_t { Existential, Universal };

struct QuantifierBlock {
  Quantifier quantifier;
  std::vector<Var> vars;

  bool operator==(const QuantifierBlock&) const = default;
};

/// Quantifier prefix Q_1 X_1 ... Q_k X_k with strictly alternating blocks.
/// Levels are 1-based block positions; unbound variables have level 0.
class Prefix {
 public:
  Prefix() = default;

  /// Builds a prefix from blocks in order. Adjacent blocks with the same
  /// quantifier are merged and empty blocks dropped. Throws
  /// PreconditionError if a variable is bound twice or is 0.
  static Prefix from_blocks(std::vector<QuantifierBlock> blocks);

  /// Returns a copy with `vars` bound existentially at the outermost level.
  Prefix with_outer_existentials(std::span<const Var> vars) const;

  std::span<const QuantifierBlock> blocks() const { return blocks_; }

  bool is_bound(Var v) const { return v < level_.size() && level_[v] != 0; }
  /// Throws UnboundVariable.
  unsigned level(Var v) const;
  unsigned level(Literal l) const { return level(l.var()); }
  Quantifier quantifier(Var v) const;
  bool is_universal(Var v) const { return quantifier(v) == Quantifier::Universal; }
  bool is_existential(Var v) const { return quantifier(v) == Quantifier::Existential; }
  bool is_universal(Literal l) const { return is_universal(l.var()); }
  bool is_existential(Literal l) const { return is_existential(l.var()); }

  /// Largest bound variable id (0 for an empty prefix).
  Var max_var() const { return level_.empty() ? 0 : static_cast<Var>(level_.size() - 1); }
  std::size_t num_bound() const { return num_bound_; }

  /// Variables in prefix order.
  std::vector<Var> variables() const;
  std::vector<Var> existentials() const;
  std::vector<Var> universals() const;

  bool operator==(const Prefix& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<QuantifierBlock> blocks_;
  std::vector<unsigned> level_;  // indexed by variable
  std::size_t num_bound_ = 0;
};

/// Closed prenex CNF formula Q.phi.
class QbfFormula {
 public:
  QbfFormula() = default;
  /// Throws UnboundVariable if the matrix mentions a variable outside the
  /// prefix. `num_vars` is the declared variable count; it is raised to
  /// the largest bound variable when smaller.
  QbfFormula(Prefix prefix, std::vector<Clause> matrix, Var num_vars = 0);

  const Prefix& prefix() const { return prefix_; }
  std::span<const Clause> matrix() const { return matrix_; }
  Var num_vars() const { return num_vars_; }

  bool operator==(const QbfFormula&) const = default;

 private:
  Prefix prefix_;
  std::vector<Clause> matrix_;
  Var num_vars_ = 0;
};

/// The literals of `c` whose variable is existential, in order.
Clause existential_subclause(const Clause& c, const Prefix& prefix);
Clause universal_subclause(const Clause& c, const Prefix& prefix);

}  // namespace qproof
