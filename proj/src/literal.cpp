#include "qproof/literal.hpp"

#include <algorithm>
#include <limits>

#include "qproof/error.hpp"

namespace qproof {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string()) +
            ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

UnboundVariable::UnboundVariable(unsigned var)
    : Error("variable " + std::to_string(var) + " is not bound by the prefix"), var_(var) {}

Literal Literal::from_dimacs(long long value) {
  if (value == 0) throw PreconditionError("0 is not a literal");
  const long long magnitude = value < 0 ? -value : value;
  if (magnitude > std::numeric_limits<int>::max()) throw PreconditionError("literal out of range");
  return Literal(static_cast<Var>(magnitude), value < 0);
}

std::string to_string(Literal l) { return std::to_string(l.to_dimacs()); }

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause::Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}

Clause Clause::from_dimacs(std::initializer_list<int> literals) {
  return from_dimacs(std::span<const int>(literals.begin(), literals.size()));
}

Clause Clause::from_dimacs(std::span<const int> literals) {
  std::vector<Literal> lits;
  lits.reserve(literals.size());
  for (int v : literals) lits.push_back(Literal::from_dimacs(v));
  return Clause(std::move(lits));
}

bool Clause::contains(Literal l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::contains_var(Var v) const { return contains(Literal(v, false)) || contains(Literal(v, true)); }

bool Clause::is_tautology() const {
  // Complementary literals are adjacent in the sorted order.
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].var() == literals_[i - 1].var()) return true;
  }
  return false;
}

Clause Clause::without(Literal l) const {
  Clause out;
  out.literals_.reserve(literals_.size());
  for (Literal k : literals_) {
    if (k != l) out.literals_.push_back(k);
  }
  return out;
}

Clause Clause::with(Literal l) const {
  if (contains(l)) return *this;
  Clause out = *this;
  out.literals_.insert(std::lower_bound(out.literals_.begin(), out.literals_.end(), l), l);
  return out;
}

Clause Clause::merged(const Clause& other) const {
  Clause out;
  out.literals_.reserve(literals_.size() + other.literals_.size());
  std::set_union(literals_.begin(), literals_.end(), other.literals_.begin(), other.literals_.end(),
                 std::back_inserter(out.literals_));
  return out;
}

std::vector<int> Clause::to_dimacs() const {
  std::vector<int> out;
  out.reserve(literals_.size());
  for (Literal l : literals_) out.push_back(l.to_dimacs());
  return out;
}

std::string to_string(const Clause& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += to_string(c[i]);
  }
  return s + "}";
}

}  // namespace qproof

std::size_t std::hash<qproof::Clause>::operator()(const qproof::Clause& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (qproof::Literal l : c) {
    h ^= l.code();
    h *= 0x100000001b3ull;
  }
  return h;
}
