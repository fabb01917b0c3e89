#include "qproof/qrat.hpp"

#include <algorithm>
#include <string>

#include "qproof/error.hpp"

namespace qproof {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::VerifiedRefutation:
      return "verified-refutation";
    case Verdict::VerifiedDerivation:
      return "verified-derivation";
    case Verdict::Rejected:
      return "rejected";
  }
  return "?";
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::At:
      return "AT";
    case Justification::Qrat:
      return "QRAT";
    case Justification::Deletion:
      return "deletion";
    case Justification::Qratu:
      return "QRATU";
    case Justification::Ur:
      return "UR";
    case Justification::Eur:
      return "EUR";
  }
  return "?";
}

std::string_view to_code(RejectReason r) {
  switch (r) {
    case RejectReason::NotAtNotQrat:
      return "not-at-not-qrat";
    case RejectReason::ClauseNotPresent:
      return "clause-not-present";
    case RejectReason::PivotNotUniversal:
      return "pivot-not-universal";
    case RejectReason::PivotMissing:
      return "pivot-missing";
    case RejectReason::UreduceFailed:
      return "ureduce-failed";
    case RejectReason::UnknownVariable:
      return "unknown-variable";
    case RejectReason::NoEmptyClause:
      return "no-empty-clause";
    case RejectReason::PivotTautology:
      return "pivot-tautology";
    case RejectReason::MalformedStep:
      return "malformed-step";
  }
  return "?";
}

QratStep QratStep::add(Clause c, std::optional<Literal> pivot) {
  if (!pivot && !c.empty()) pivot = c[0];
  return QratStep{StepKind::Add, std::move(c), pivot};
}

QratStep QratStep::remove(Clause c) { return QratStep{StepKind::Delete, std::move(c), std::nullopt}; }

QratStep QratStep::ureduce(Clause c, Literal pivot) { return QratStep{StepKind::UReduce, std::move(c), pivot}; }

Clause outer_resolvent(const Prefix& p, const Clause& c, const Clause& d, Literal l) {
  if (c.contains(l)) throw PreconditionError("outer resolvent: pivot " + to_string(l) + " occurs in C");
  if (!d.contains(~l)) throw PreconditionError("outer resolvent: complement of " + to_string(l) + " missing from D");
  const unsigned pivot_level = p.level(l);
  std::vector<Literal> lits(c.begin(), c.end());
  for (Literal k : d) {
    if (k != ~l && p.level(k) <= pivot_level) lits.push_back(k);
  }
  return Clause(std::move(lits));
}

namespace {

void require_member(const Clause& c, Literal l, const char* op) {
  if (!c.contains(l)) throw PreconditionError(std::string(op) + ": literal " + to_string(l) + " not in clause");
}

void require_universal(const Prefix& p, Literal l, const char* op) {
  if (!p.is_universal(l)) throw PreconditionError(std::string(op) + ": literal " + to_string(l) + " is not universal");
}

}  // namespace

bool is_qrat_clause(const QbfFormula& f, const Clause& c, Literal l, AtMode mode) {
  require_member(c, l, "is_qrat_clause");
  QratChecker checker(f, CheckerConfig{mode, UnivRule::Ur, false});
  return checker.is_qrat_clause(c, l);
}

Clause eic(const QbfFormula& f, const Clause& c, Literal l) {
  require_member(c, l, "eic");
  require_universal(f.prefix(), l, "eic");
  QratChecker checker(f, CheckerConfig{});
  return checker.eic(c, l);
}

bool check_ureduce(const QbfFormula& f, const Clause& c, Literal l, const CheckerConfig& cfg) {
  require_member(c, l, "check_ureduce");
  require_universal(f.prefix(), l, "check_ureduce");
  QratChecker checker(f, cfg);
  return checker.ureduce_rule(c, l).has_value();
}

QratChecker::QratChecker(const QbfFormula& f, CheckerConfig cfg)
    : prefix_(f.prefix()), num_vars_(f.num_vars()), cfg_(cfg), propagator_(f.prefix(), cfg.at_mode) {
  occurs_.resize(2 * (static_cast<std::size_t>(prefix_.max_var()) + 1));
  for (const Clause& c : f.matrix()) insert(c);
}

void QratChecker::insert(const Clause& c) {
  const Slot s = slots_.size();
  slots_.emplace_back(c);
  propagator_.add_clause(c);
  index_[c].push_back(s);
  for (Literal l : c) {
    if (l.code() >= occurs_.size()) occurs_.resize(l.code() + 2);
    occurs_[l.code()].push_back(s);
  }
  ++live_;
}

void QratChecker::erase(Slot s) {
  auto it = index_.find(*slots_[s]);
  auto& ids = it->second;
  ids.erase(std::find(ids.begin(), ids.end(), s));
  if (ids.empty()) index_.erase(it);
  propagator_.remove_clause(s);
  slots_[s].reset();
  --live_;
}

std::optional<QratChecker::Slot> QratChecker::find(const Clause& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second.back();
}

std::vector<QratChecker::Slot> QratChecker::occurrences(Literal l) {
  if (l.code() >= occurs_.size()) return {};
  auto& list = occurs_[l.code()];
  std::erase_if(list, [this](Slot s) { return !slots_[s]; });
  return list;
}

bool QratChecker::all_bound(const Clause& c) const {
  return std::all_of(c.begin(), c.end(), [this](Literal l) { return prefix_.is_bound(l.var()); });
}

bool QratChecker::is_at(const Clause& c) {
  ++stats_.at_checks;
  return propagator_.propagate(negated(c)).conflict();
}

bool QratChecker::is_qrat_clause(const Clause& c, Literal l) {
  ++stats_.qrat_checks;
  const Clause rest = c.without(l);
  for (Slot s : occurrences(~l)) {
    if (!is_at(outer_resolvent(prefix_, rest, *slots_[s], l))) return false;
  }
  return true;
}

Clause QratChecker::eic(const Clause& c, Literal l) {
  const unsigned pivot_level = prefix_.level(l);
  std::vector<bool> in(occurs_.size() + 2, false);
  std::vector<Literal> lits;
  std::vector<Literal> work;
  auto add = [&](Literal k) {
    if (k.code() >= in.size()) in.resize(k.code() + 2, false);
    if (in[k.code()]) return;
    in[k.code()] = true;
    lits.push_back(k);
    if (prefix_.is_existential(k) && prefix_.level(k) > pivot_level) work.push_back(k);
  };
  for (Literal k : c) add(k);
  while (!work.empty()) {
    const Literal k = work.back();
    work.pop_back();
    for (Slot s : occurrences(~k)) {
      for (Literal m : *slots_[s]) {
        if (prefix_.level(m) > pivot_level || m == ~l) add(m);
      }
    }
  }
  return Clause(std::move(lits));
}

std::optional<Justification> QratChecker::ureduce_rule(const Clause& c, Literal l) {
  if (c.contains(~l)) return std::nullopt;
  const unsigned pivot_level = prefix_.level(l);
  if (cfg_.univ_rule == UnivRule::Ur) {
    const bool blocked = std::any_of(c.begin(), c.end(), [&](Literal k) {
      return prefix_.is_existential(k) && prefix_.level(k) > pivot_level;
    });
    if (!blocked) return Justification::Ur;
  }
  if (is_qrat_clause(c, l)) return Justification::Qratu;
  if (cfg_.univ_rule == UnivRule::Eur && !eic(c, l).contains(~l)) return Justification::Eur;
  return std::nullopt;
}

namespace {

StepResult reject(RejectReason reason, std::string message) {
  StepResult r;
  r.reason = reason;
  r.message = std::move(message);
  return r;
}

StepResult accept(Justification j) {
  StepResult r;
  r.accepted = true;
  r.justification = j;
  return r;
}

}  // namespace

StepResult QratChecker::apply(const QratStep& step) {
  const Clause& c = step.clause;
  stats_.max_clause_width = std::max(stats_.max_clause_width, c.size());
  if (!all_bound(c)) return reject(RejectReason::UnknownVariable, "clause " + to_string(c) + " mentions an unbound variable");

  switch (step.kind) {
    case StepKind::Add: {
      if (step.pivot && !c.contains(*step.pivot)) {
        return reject(RejectReason::MalformedStep, "pivot " + to_string(*step.pivot) + " is not in the clause");
      }
      Justification j = Justification::At;
      if (!is_at(c)) {
        const bool qrat = cfg_.allow_qrat_additions && step.pivot && prefix_.is_existential(*step.pivot) &&
                          is_qrat_clause(c, *step.pivot);
        if (!qrat) return reject(RejectReason::NotAtNotQrat, "clause " + to_string(c) + " is neither AT nor QRAT");
        j = Justification::Qrat;
      }
      insert(c);
      if (c.empty()) derived_empty_ = true;
      ++(j == Justification::At ? stats_.adds_at : stats_.adds_qrat);
      return accept(j);
    }
    case StepKind::Delete: {
      auto s = find(c);
      if (!s) return reject(RejectReason::ClauseNotPresent, "clause " + to_string(c) + " is not in the matrix");
      erase(*s);
      ++stats_.deletes;
      return accept(Justification::Deletion);
    }
    case StepKind::UReduce: {
      if (!step.pivot || !c.contains(*step.pivot)) {
        return reject(RejectReason::PivotMissing, "reduction without a pivot in the clause");
      }
      const Literal l = *step.pivot;
      if (!prefix_.is_universal(l)) {
        return reject(RejectReason::PivotNotUniversal, "pivot " + to_string(l) + " is not universal");
      }
      auto s = find(c);
      if (!s) return reject(RejectReason::ClauseNotPresent, "clause " + to_string(c) + " is not in the matrix");
      if (c.contains(~l)) {
        return reject(RejectReason::PivotTautology, "clause " + to_string(c) + " contains both polarities of the pivot");
      }
      auto rule = ureduce_rule(c, l);
      if (!rule) return reject(RejectReason::UreduceFailed, "cannot drop " + to_string(l) + " from " + to_string(c));
      erase(*s);
      insert(c.without(l));
      switch (*rule) {
        case Justification::Ur:
          ++stats_.ureduce_ur;
          break;
        case Justification::Eur:
          ++stats_.ureduce_eur;
          break;
        default:
          ++stats_.ureduce_qratu;
          break;
      }
      return accept(*rule);
    }
  }
  return reject(RejectReason::MalformedStep, "unknown step kind");
}

QbfFormula QratChecker::working_formula() const {
  std::vector<Clause> matrix;
  matrix.reserve(live_);
  for (const auto& s : slots_) {
    if (s) matrix.push_back(*s);
  }
  return QbfFormula(prefix_, std::move(matrix), num_vars_);
}

QratStats QratChecker::stats() const {
  QratStats s = stats_;
  s.propagation = propagator_.stats();
  return s;
}

QratReport check_proof(const QbfFormula& f, const QratProof& p, const CheckerConfig& cfg) {
  QratChecker checker(f, cfg);
  QratReport report;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    StepResult r = checker.apply(p.steps[i]);
    if (!r.accepted) {
      report.verdict = Verdict::Rejected;
      report.failed_step = i + 1;
      report.reason = r.reason;
      report.message = std::move(r.message);
      report.stats = checker.stats();
      return report;
    }
  }
  report.verdict = checker.derived_empty_clause() ? Verdict::VerifiedRefutation : Verdict::VerifiedDerivation;
  report.stats = checker.stats();
  return report;
}

}  // namespace qproof
