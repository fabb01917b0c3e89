#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qproof/formula.hpp"
#include "qproof/unitprop.hpp"
#include "qproof/verdict.hpp"

namespace qproof {

enum class StepKind : std::uint8_t { Add, Delete, UReduce };

/// One proof line. `pivot` is the first literal written on the line: the
/// candidate QRAT literal of an addition, the literal dropped by a
/// reduction, and absent for deletions and for adding the empty clause.
struct QratStep {
  StepKind kind = StepKind::Add;
  Clause clause;
  std::optional<Literal> pivot;

  /// Addition whose pivot is `pivot`, or the smallest literal if omitted.
  static QratStep add(Clause c, std::optional<Literal> pivot = {});
  static QratStep remove(Clause c);
  static QratStep ureduce(Clause c, Literal pivot);

  bool operator==(const QratStep&) const = default;
};

struct QratProof {
  std::vector<QratStep> steps;
  /// Path of the formula, taken from a `c formula <path>` comment.
  std::optional<std::string> formula_ref;

  bool operator==(const QratProof&) const = default;
};

enum class UnivRule : std::uint8_t { Ur, Eur };

struct CheckerConfig {
  AtMode at_mode = AtMode::Propositional;
  UnivRule univ_rule = UnivRule::Ur;
  /// When false, additions must be plain AT.
  bool allow_qrat_additions = false;
};

/// How an accepted step was justified.
enum class Justification : std::uint8_t { At, Qrat, Deletion, Qratu, Ur, Eur };

enum class RejectReason : std::uint8_t {
  NotAtNotQrat,
  ClauseNotPresent,
  PivotNotUniversal,
  PivotMissing,
  UreduceFailed,
  UnknownVariable,
  NoEmptyClause,
  PivotTautology,
  MalformedStep,
};

std::string_view to_string(Justification j);
/// Stable kebab-case code used in verdict lines.
std::string_view to_code(RejectReason r);

struct StepResult {
  bool accepted = false;
  Justification justification = Justification::At;
  RejectReason reason = RejectReason::MalformedStep;
  std::string message;
};

struct QratStats {
  std::uint64_t adds_at = 0;
  std::uint64_t adds_qrat = 0;
  std::uint64_t deletes = 0;
  std::uint64_t ureduce_qratu = 0;
  std::uint64_t ureduce_ur = 0;
  std::uint64_t ureduce_eur = 0;
  std::size_t max_clause_width = 0;
  std::uint64_t at_checks = 0;
  std::uint64_t qrat_checks = 0;
  PropagationStats propagation;
};

struct QratReport {
  Verdict verdict = Verdict::VerifiedDerivation;
  /// 1-based index of the rejected step.
  std::optional<std::size_t> failed_step;
  std::optional<RejectReason> reason;
  std::string message;
  QratStats stats;
};

/// The literals of `c` plus those of `d` other than the complement of `l`
/// whose level is at most the level of `l`. Requires l not in c and its
/// complement in d.
Clause outer_resolvent(const Prefix& p, const Clause& c, const Clause& d, Literal l);

/// Every outer resolvent of `c` on `l` against a matrix clause containing
/// the complement of `l` is AT. Requires l in c.
bool is_qrat_clause(const QbfFormula& f, const Clause& c, Literal l, AtMode mode);

/// Extended inner clause of `c` with respect to the universal literal `l`.
Clause eic(const QbfFormula& f, const Clause& c, Literal l);

/// Whether `l` may be dropped from `c` by QRATU or by the configured rule.
bool check_ureduce(const QbfFormula& f, const Clause& c, Literal l, const CheckerConfig& cfg);

/// Replays a proof step by step against a working copy of a matrix.
class QratChecker {
 public:
  QratChecker(const QbfFormula& f, CheckerConfig cfg);

  /// Checks and, on acceptance, applies one step. A rejected step leaves
  /// the working matrix unchanged.
  StepResult apply(const QratStep& step);

  bool derived_empty_clause() const { return derived_empty_; }
  QbfFormula working_formula() const;
  std::size_t num_clauses() const { return live_; }
  const CheckerConfig& config() const { return cfg_; }
  QratStats stats() const;

  bool is_at(const Clause& c);
  bool is_qrat_clause(const Clause& c, Literal l);
  Clause eic(const Clause& c, Literal l);
  /// The rule that justifies dropping `l` from `c`, if any. Never
  /// justifies a drop from a clause that also contains the complement.
  std::optional<Justification> ureduce_rule(const Clause& c, Literal l);

 private:
  using Slot = std::size_t;

  void insert(const Clause& c);
  void erase(Slot s);
  std::optional<Slot> find(const Clause& c) const;
  // Live slots whose clause contains `l`.
  std::vector<Slot> occurrences(Literal l);
  bool all_bound(const Clause& c) const;

  Prefix prefix_;
  Var num_vars_;
  CheckerConfig cfg_;
  Propagator propagator_;
  std::vector<std::optional<Clause>> slots_;  // index equals propagator clause id
  std::unordered_map<Clause, std::vector<Slot>> index_;
  std::vector<std::vector<Slot>> occurs_;  // by literal code, pruned lazily
  std::size_t live_ = 0;
  bool derived_empty_ = false;
  QratStats stats_;
};

QratReport check_proof(const QbfFormula& f, const QratProof& p, const CheckerConfig& cfg);

/// Reads the line-based proof format. Throws ParseError with the line
/// number on malformed or truncated lines.
QratProof parse_qrat(std::istream& in);
QratProof parse_qrat(std::string_view text);
void write_qrat(std::ostream& out, const QratProof& p);
std::string write_qrat(const QratProof& p);

}  // namespace qproof
