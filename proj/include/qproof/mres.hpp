#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qproof/formula.hpp"
#include "qproof/merge_map.hpp"
#include "qproof/semantics.hpp"
#include "qproof/verdict.hpp"

namespace qproof {

struct Axiom {
  std::size_t input_clause;  // 1-based position in the matrix
  bool operator==(const Axiom&) const = default;
};

struct Resolution {
  LineIndex a;
  LineIndex b;
  Var pivot;
  /// Universal variables whose map must be merged even where select applies.
  std::vector<Var> forced_merge;
  bool operator==(const Resolution&) const = default;
};

using MResJustification = std::variant<Axiom, Resolution>;

/// A proof line as written. The checker rebuilds clause and maps from the
/// justification; `clause` and `maps`, when given, are claims that must
/// match the reconstruction.
struct MResLine {
  LineIndex index = 0;
  MResJustification justification;
  std::optional<Clause> clause;
  std::map<Var, MergeMap> maps;

  bool operator==(const MResLine&) const = default;
};

struct MResProof {
  std::optional<std::string> formula_ref;
  std::vector<MResLine> lines;

  bool operator==(const MResProof&) const = default;
};

enum class MResReason : std::uint8_t {
  DanglingReference,
  BadInputClause,
  NonExistentialLiteral,
  PivotAbsent,
  PivotNotExistential,
  NoMapRule,
  InconsistentMerge,
  MergeOrder,
  ClauseMismatch,
  MapMismatch,
  LineOrder,
  NotUniversal,
  NoEmptyClause,
  TautologicalUniversal,
};

std::string_view to_code(MResReason r);

/// A line as rebuilt by the checker.
struct CheckedLine {
  LineIndex index = 0;
  Clause clause;
  std::map<Var, MergeMap> maps;  // one entry per universal variable
};

struct MResStats {
  std::size_t axioms = 0;
  std::size_t resolutions = 0;
  std::size_t selects = 0;
  std::size_t merges = 0;
  std::size_t forced_merges = 0;
  std::size_t tautological_resolvents = 0;
  std::size_t max_map_size = 0;
};

struct MResReport {
  Verdict verdict = Verdict::VerifiedDerivation;
  /// 1-based position of the rejected line in the proof.
  std::optional<std::size_t> failed_step;
  std::optional<MResReason> reason;
  std::string message;
  std::vector<std::string> warnings;
  /// Accepted lines in proof order.
  std::vector<CheckedLine> lines;
  MResStats stats;
};

/// Rebuilds every line (axiom: existential part of the input clause with
/// leaf maps; resolution: resolvent with select, else merge when the pivot
/// is left of the universal) and compares against any claims.
MResReport check_proof(const QbfFormula& f, const MResProof& p);

/// The final merge maps of a verified refutation. Throws PreconditionError
/// when `p` is not one.
UniversalStrategy extract_strategy(const QbfFormula& f, const MResProof& p);

/// Text format: optional header `p mres <ref>`, then
/// `<i> a <n>` or `<i> r <a> <b> <pivot> [m <u>...]`, each optionally
/// followed by `= <literals> 0` claiming the line's clause.
MResProof parse_mres(std::istream& in);
MResProof parse_mres(std::string_view text);
void write_mres(std::ostream& out, const MResProof& p);
std::string write_mres(const MResProof& p);

}  // namespace qproof
