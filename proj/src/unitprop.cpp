#include "qproof/unitprop.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qproof {

Propagator::Propagator(const Prefix& prefix, AtMode mode) : prefix_(prefix), mode_(mode) {
  ensure_var(prefix_.max_var());
}

void Propagator::ensure_var(Var v) {
  if (v >= values_.size()) {
    values_.resize(v + 1, kUnassigned);
    watches_.resize(2 * (v + 1));
  }
}

bool Propagator::watchable(Literal l) const {
  return mode_ == AtMode::Propositional || !prefix_.is_bound(l.var()) || prefix_.is_existential(l);
}

std::int8_t Propagator::value(Literal l) const {
  const std::int8_t v = values_[l.var()];
  if (v == kUnassigned) return kUnassigned;
  return l.positive() ? v : static_cast<std::int8_t>(1 - v);
}

void Propagator::assign(Literal l) {
  values_[l.var()] = l.positive() ? kTrue : kFalse;
  trail_.push_back(l);
  queue_.push_back(l);
  ++stats_.assignments;
}

Propagator::ClauseId Propagator::add_clause(const Clause& c) {
  StoredClause sc;
  sc.lits.assign(c.begin(), c.end());
  for (Literal l : sc.lits) ensure_var(l.var());
  auto mid = std::stable_partition(sc.lits.begin(), sc.lits.end(), [this](Literal l) { return watchable(l); });
  sc.watchable = static_cast<std::uint32_t>(mid - sc.lits.begin());
  const ClauseId id = clauses_.size();
  if (sc.watchable >= 1) watches_[sc.lits[0].code()].push_back(id);
  if (sc.watchable >= 2) {
    watches_[sc.lits[1].code()].push_back(id);
  } else {
    short_clauses_.push_back(id);
  }
  clauses_.push_back(std::move(sc));
  ++live_;
  return id;
}

void Propagator::remove_clause(ClauseId id) {
  if (clauses_[id].alive) {
    clauses_[id].alive = false;
    --live_;
  }
}

bool Propagator::has_unassigned_universal(const StoredClause& c) const {
  for (std::size_t k = c.watchable; k < c.lits.size(); ++k) {
    if (value(c.lits[k]) == kUnassigned) return true;
  }
  return false;
}

bool Propagator::has_true_literal(const StoredClause& c) const {
  return std::any_of(c.lits.begin(), c.lits.end(), [this](Literal l) { return value(l) == kTrue; });
}

bool Propagator::check_short(ClauseId id) {
  const StoredClause& c = clauses_[id];
  ++stats_.clause_visits;
  if (has_true_literal(c)) return true;
  if (c.watchable == 0) return false;
  const Literal w = c.lits[0];
  const auto v = value(w);
  if (v == kFalse) return false;
  if (v == kUnassigned && (mode_ == AtMode::Propositional || !has_unassigned_universal(c))) assign(w);
  return true;
}

PropagationResult Propagator::propagate(std::span<const Literal> seed, std::optional<std::uint64_t> visit_seed) {
  ++stats_.calls;
  for (Literal l : trail_) values_[l.var()] = kUnassigned;
  trail_.clear();
  queue_.clear();

  PropagationResult result;
  auto finish_conflict = [&](std::optional<ClauseId> clause) {
    result.outcome = PropagationOutcome::Conflict;
    result.conflict_clause = clause;
    return result;
  };

  for (Literal l : seed) {
    ensure_var(l.var());
    const auto v = value(l);
    if (v == kFalse) return finish_conflict(std::nullopt);
    if (v == kUnassigned) assign(l);
  }
  const std::size_t seed_count = trail_.size();

  std::erase_if(short_clauses_, [this](ClauseId id) { return !clauses_[id].alive; });
  for (ClauseId id : short_clauses_) {
    if (!check_short(id)) return finish_conflict(id);
  }

  std::mt19937_64 rng(visit_seed.value_or(0));
  std::size_t head = 0;
  while (head < queue_.size()) {
    if (visit_seed) {
      std::uniform_int_distribution<std::size_t> pick(head, queue_.size() - 1);
      std::swap(queue_[head], queue_[pick(rng)]);
    }
    const Literal false_lit = ~queue_[head++];
    auto& ws = watches_[false_lit.code()];
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<ClauseId> conflict;
    for (; i < ws.size(); ++i) {
      const ClauseId id = ws[i];
      StoredClause& c = clauses_[id];
      if (!c.alive) continue;
      ++stats_.clause_visits;
      if (c.watchable == 1) {
        ws[j++] = id;
        if (!has_true_literal(c)) {
          conflict = id;
          ++i;
          break;
        }
        continue;
      }
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      const Literal other = c.lits[0];
      if (value(other) == kTrue) {
        ws[j++] = id;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.watchable; ++k) {
        if (value(c.lits[k]) != kFalse) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[c.lits[1].code()].push_back(id);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = id;
      if (c.watchable < c.lits.size() && has_true_literal(c)) continue;
      if (value(other) == kFalse) {
        conflict = id;
        ++i;
        break;
      }
      if (mode_ == AtMode::Propositional || !has_unassigned_universal(c)) assign(other);
    }
    for (; i < ws.size(); ++i) ws[j++] = ws[i];
    ws.resize(j);
    if (conflict) return finish_conflict(conflict);
  }

  result.implied.assign(trail_.begin() + static_cast<std::ptrdiff_t>(seed_count), trail_.end());
  std::sort(result.implied.begin(), result.implied.end());
  return result;
}

PropagationResult propagate(std::span<const Clause> clauses, std::span<const Literal> seed, const Prefix& prefix,
                            AtMode mode, std::optional<std::uint64_t> visit_seed) {
  std::vector<std::size_t> order(clauses.size());
  std::iota(order.begin(), order.end(), 0);
  if (visit_seed) {
    std::mt19937_64 rng(*visit_seed ^ 0x9e3779b97f4a7c15ull);
    std::shuffle(order.begin(), order.end(), rng);
  }
  Propagator prop(prefix, mode);
  for (std::size_t pos : order) prop.add_clause(clauses[pos]);
  auto result = prop.propagate(seed, visit_seed);
  if (result.conflict_clause) result.conflict_clause = order[*result.conflict_clause];
  return result;
}

std::vector<Literal> negated(const Clause& c) {
  std::vector<Literal> out;
  out.reserve(c.size());
  for (Literal l : c) out.push_back(~l);
  return out;
}

bool is_at(const Clause& c, const QbfFormula& f, AtMode mode) {
  return propagate(f.matrix(), negated(c), f.prefix(), mode).conflict();
}

}  // namespace qproof
