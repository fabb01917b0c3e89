#include "qproof/mres.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "qproof/error.hpp"

namespace qproof {

std::string_view to_code(MResReason r) {
  switch (r) {
    case MResReason::DanglingReference:
      return "dangling-reference";
    case MResReason::BadInputClause:
      return "bad-input-clause";
    case MResReason::NonExistentialLiteral:
      return "non-existential-literal";
    case MResReason::PivotAbsent:
      return "pivot-absent";
    case MResReason::PivotNotExistential:
      return "pivot-not-existential";
    case MResReason::NoMapRule:
      return "no-map-rule";
    case MResReason::InconsistentMerge:
      return "inconsistent-merge";
    case MResReason::MergeOrder:
      return "merge-order";
    case MResReason::ClauseMismatch:
      return "clause-mismatch";
    case MResReason::MapMismatch:
      return "map-mismatch";
    case MResReason::LineOrder:
      return "line-order";
    case MResReason::NotUniversal:
      return "not-universal";
    case MResReason::NoEmptyClause:
      return "no-empty-clause";
    case MResReason::TautologicalUniversal:
      return "tautological-universal";
  }
  return "?";
}

namespace {

struct LineError {
  MResReason reason;
  std::string message;
};

class Reconstructor {
 public:
  explicit Reconstructor(const QbfFormula& f) : f_(f), universals_(f.prefix().universals()) {}

  // Returns the rebuilt line or the reason it is rejected.
  std::variant<CheckedLine, LineError> build(const MResLine& line, MResStats& stats,
                                             std::vector<std::string>& warnings) {
    if (line.index == 0 || (last_index_ && line.index <= *last_index_)) {
      return LineError{MResReason::LineOrder, "line index " + std::to_string(line.index) + " does not increase"};
    }
    if (const auto* ax = std::get_if<Axiom>(&line.justification)) return axiom(line.index, *ax, stats);
    return resolution(line.index, std::get<Resolution>(line.justification), stats, warnings);
  }

  void accept(CheckedLine line) {
    last_index_ = line.index;
    by_index_.emplace(line.index, lines_.size());
    lines_.push_back(std::move(line));
  }

  std::vector<CheckedLine> take_lines() { return std::move(lines_); }

 private:
  std::variant<CheckedLine, LineError> axiom(LineIndex index, const Axiom& ax, MResStats& stats) {
    const auto matrix = f_.matrix();
    if (ax.input_clause == 0 || ax.input_clause > matrix.size()) {
      return LineError{MResReason::BadInputClause, "no input clause " + std::to_string(ax.input_clause)};
    }
    const Clause& c = matrix[ax.input_clause - 1];
    CheckedLine out;
    out.index = index;
    out.clause = existential_subclause(c, f_.prefix());
    for (Var u : universals_) {
      const bool pos = c.contains(Literal(u, false));
      const bool neg = c.contains(Literal(u, true));
      if (pos && neg) {
        return LineError{MResReason::TautologicalUniversal,
                         "input clause " + std::to_string(ax.input_clause) + " contains both literals of " +
                             std::to_string(u)};
      }
      const LeafLabel label = pos ? LeafLabel::Negative : neg ? LeafLabel::Positive : LeafLabel::DontCare;
      out.maps.emplace(u, MergeMap::leaf(index, label));
    }
    ++stats.axioms;
    return out;
  }

  std::variant<CheckedLine, LineError> resolution(LineIndex index, const Resolution& r, MResStats& stats,
                                                  std::vector<std::string>& warnings) {
    const CheckedLine* a = find(r.a);
    const CheckedLine* b = find(r.b);
    if (!a || !b) {
      return LineError{MResReason::DanglingReference, "line " + std::to_string(!a ? r.a : r.b) + " is not an earlier line"};
    }
    const Prefix& prefix = f_.prefix();
    if (!prefix.is_bound(r.pivot) || !prefix.is_existential(r.pivot)) {
      return LineError{MResReason::PivotNotExistential, "pivot " + std::to_string(r.pivot) + " is not existential"};
    }
    const Literal x(r.pivot, false);
    if (!(a->clause.contains(x) && b->clause.contains(~x))) std::swap(a, b);
    if (!(a->clause.contains(x) && b->clause.contains(~x))) {
      return LineError{MResReason::PivotAbsent,
                       "pivot " + std::to_string(r.pivot) + " does not occur with opposite signs in lines " +
                           std::to_string(r.a) + " and " + std::to_string(r.b)};
    }
    for (Var u : r.forced_merge) {
      if (!prefix.is_bound(u) || !prefix.is_universal(u)) {
        return LineError{MResReason::NotUniversal, "forced merge on non-universal variable " + std::to_string(u)};
      }
    }

    CheckedLine out;
    out.index = index;
    out.clause = a->clause.without(x).merged(b->clause.without(~x));
    if (out.clause.is_tautology()) {
      ++stats.tautological_resolvents;
      warnings.push_back("line " + std::to_string(index) + ": tautological resolvent " + to_string(out.clause));
    }

    const unsigned pivot_level = prefix.level(r.pivot);
    for (Var u : universals_) {
      const MergeMap& ma = a->maps.at(u);
      const MergeMap& mb = b->maps.at(u);
      const bool forced = std::find(r.forced_merge.begin(), r.forced_merge.end(), u) != r.forced_merge.end();
      const bool may_merge = pivot_level < prefix.level(u);
      if (!forced) {
        if (auto s = try_select(ma, mb)) {
          out.maps.emplace(u, std::move(*s));
          ++stats.selects;
          continue;
        }
      }
      if (!may_merge) {
        if (forced) {
          return LineError{MResReason::MergeOrder, "merge on " + std::to_string(u) + " requires pivot " +
                                                       std::to_string(r.pivot) + " left of it"};
        }
        return LineError{MResReason::NoMapRule,
                         "neither select nor merge applies for " + std::to_string(u) + " at line " + std::to_string(index)};
      }
      if (!is_consistent(ma, mb)) {
        return LineError{MResReason::InconsistentMerge, "maps for " + std::to_string(u) + " are inconsistent"};
      }
      MergeMap m = merge(ma, mb, index, r.pivot);
      audit(m, u);
      out.maps.emplace(u, std::move(m));
      ++stats.merges;
      if (forced) ++stats.forced_merges;
    }
    ++stats.resolutions;
    return out;
  }

  // The only rule a line adds to a map is its own branch; everything else
  // was audited when first created.
  void audit(const MergeMap& m, Var u) const {
    const auto& b = std::get<Branch>(m.at(m.root()));
    const Prefix& prefix = f_.prefix();
    if (b.low >= m.root() || b.high >= m.root()) throw std::logic_error("merge map child not below its parent");
    if (!prefix.is_existential(b.var) || prefix.level(b.var) >= prefix.level(u)) {
      throw std::logic_error("merge map branches on a variable not left of its universal");
    }
  }

  const CheckedLine* find(LineIndex i) const {
    auto it = by_index_.find(i);
    return it == by_index_.end() ? nullptr : &lines_[it->second];
  }

  const QbfFormula& f_;
  std::vector<Var> universals_;
  std::vector<CheckedLine> lines_;
  std::unordered_map<LineIndex, std::size_t> by_index_;
  std::optional<LineIndex> last_index_;
};

std::optional<LineError> compare_claims(const MResLine& line, const CheckedLine& built, const Prefix& prefix) {
  if (line.clause) {
    for (Literal l : *line.clause) {
      if (!prefix.is_bound(l.var()) || !prefix.is_existential(l)) {
        return LineError{MResReason::NonExistentialLiteral, "claimed clause contains " + to_string(l)};
      }
    }
    if (*line.clause != built.clause) {
      return LineError{MResReason::ClauseMismatch,
                       "claimed " + to_string(*line.clause) + ", derived " + to_string(built.clause)};
    }
  }
  for (const auto& [u, m] : line.maps) {
    auto it = built.maps.find(u);
    if (it == built.maps.end()) {
      return LineError{MResReason::NotUniversal, "claimed map for non-universal variable " + std::to_string(u)};
    }
    if (!(it->second == m)) {
      return LineError{MResReason::MapMismatch, "claimed map for " + std::to_string(u) + " differs from the derived one"};
    }
  }
  return std::nullopt;
}

}  // namespace

MResReport check_proof(const QbfFormula& f, const MResProof& p) {
  MResReport report;
  Reconstructor rec(f);
  for (std::size_t pos = 0; pos < p.lines.size(); ++pos) {
    const MResLine& line = p.lines[pos];
    auto built = rec.build(line, report.stats, report.warnings);
    std::optional<LineError> error;
    if (auto* e = std::get_if<LineError>(&built)) {
      error = std::move(*e);
    } else {
      error = compare_claims(line, std::get<CheckedLine>(built), f.prefix());
    }
    if (error) {
      report.verdict = Verdict::Rejected;
      report.failed_step = pos + 1;
      report.reason = error->reason;
      report.message = std::move(error->message);
      report.lines = rec.take_lines();
      return report;
    }
    auto& checked = std::get<CheckedLine>(built);
    for (const auto& [u, m] : checked.maps) report.stats.max_map_size = std::max(report.stats.max_map_size, m.size());
    rec.accept(std::move(checked));
  }
  report.lines = rec.take_lines();
  const bool refutes = !report.lines.empty() && report.lines.back().clause.empty();
  report.verdict = refutes ? Verdict::VerifiedRefutation : Verdict::VerifiedDerivation;
  return report;
}

UniversalStrategy extract_strategy(const QbfFormula& f, const MResProof& p) {
  MResReport report = check_proof(f, p);
  if (report.verdict != Verdict::VerifiedRefutation) {
    throw PreconditionError("strategy extraction needs a verified refutation");
  }
  UniversalStrategy s;
  for (auto& [u, m] : report.lines.back().maps) s.emplace(u, std::move(m));
  return s;
}

}  // namespace qproof
