#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qproof/formula.hpp"

namespace qproof {

/// Propositional: plain unit propagation. UniversalAware: additionally a
/// clause whose existential literals are all false and which has no true
/// literal is a conflict, whatever universal literals remain unassigned.
enum class AtMode : std::uint8_t { Propositional, UniversalAware };

enum class PropagationOutcome : std::uint8_t { Conflict, Fixpoint };

struct PropagationResult {
  PropagationOutcome outcome = PropagationOutcome::Fixpoint;
  /// Literals assigned by propagation (seed literals excluded), sorted.
  std::vector<Literal> implied;
  /// Position of the conflicting clause in the input, when there is one.
  std::optional<std::size_t> conflict_clause;

  bool conflict() const { return outcome == PropagationOutcome::Conflict; }
};

struct PropagationStats {
  std::uint64_t calls = 0;
  std::uint64_t assignments = 0;
  std::uint64_t clause_visits = 0;
};

/// Unit propagation over a mutable clause database with two watched
/// literals per clause. In universal-aware mode only existential literals
/// are watched: universal literals can never be assigned by propagation
/// there, so only the seed decides them.
class Propagator {
 public:
  using ClauseId = std::size_t;

  Propagator(const Prefix& prefix, AtMode mode);

  ClauseId add_clause(const Clause& c);
  void remove_clause(ClauseId id);
  std::size_t num_live() const { return live_; }

  /// Assigns `seed`, then propagates to fixpoint or conflict. A seed with a
  /// complementary pair is an immediate conflict. `visit_seed` randomizes
  /// the order in which pending assignments are processed.
  PropagationResult propagate(std::span<const Literal> seed, std::optional<std::uint64_t> visit_seed = {});

  AtMode mode() const { return mode_; }
  const PropagationStats& stats() const { return stats_; }

 private:
  struct StoredClause {
    std::vector<Literal> lits;  // watchable literals first
    std::uint32_t watchable = 0;
    bool alive = true;
  };

  enum : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

  bool watchable(Literal l) const;
  std::int8_t value(Literal l) const;
  void assign(Literal l);
  void ensure_var(Var v);
  // Scans a clause that has at most one watchable literal.
  bool check_short(ClauseId id);
  bool has_unassigned_universal(const StoredClause& c) const;
  bool has_true_literal(const StoredClause& c) const;

  Prefix prefix_;
  AtMode mode_;
  std::vector<StoredClause> clauses_;
  std::vector<std::vector<ClauseId>> watches_;  // by literal code
  std::vector<ClauseId> short_clauses_;
  std::vector<std::int8_t> values_;  // by variable
  std::vector<Literal> trail_;
  std::vector<Literal> queue_;
  std::size_t live_ = 0;
  PropagationStats stats_;
};

/// One-shot propagation over `clauses`. `visit_seed` additionally shuffles
/// the clause insertion order.
PropagationResult propagate(std::span<const Clause> clauses, std::span<const Literal> seed, const Prefix& prefix,
                            AtMode mode, std::optional<std::uint64_t> visit_seed = {});

/// True iff propagating the negation of `c` over the matrix of `f` conflicts.
bool is_at(const Clause& c, const QbfFormula& f, AtMode mode);

/// Complements of the literals of `c`.
std::vector<Literal> negated(const Clause& c);

}  // namespace qproof
