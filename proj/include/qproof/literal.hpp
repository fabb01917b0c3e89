#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qproof {

using Var = std::uint32_t;

/// A literal packed as 2*var + sign, so the natural order sorts by variable
/// first and puts the positive literal before the negative one.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negative) : code_(2 * var + (negative ? 1u : 0u)) {}

  /// Builds a literal from a signed DIMACS integer. Throws on 0.
  static Literal from_dimacs(long long value);
  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr bool positive() const { return !negative(); }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Literal operator~() const { return from_code(code_ ^ 1u); }

  int to_dimacs() const { return negative() ? -static_cast<int>(var()) : static_cast<int>(var()); }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  std::uint32_t code_ = 0;
};

std::string to_string(Literal l);

/// A clause in normal form: literals sorted, duplicates removed. Both
/// polarities of a variable may be present; the empty clause is bottom.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  /// Convenience constructor from DIMACS integers.
  static Clause from_dimacs(std::initializer_list<int> literals);
  static Clause from_dimacs(std::span<const int> literals);

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }
  Literal operator[](std::size_t i) const { return literals_[i]; }

  bool contains(Literal l) const;
  bool contains_var(Var v) const;
  bool is_tautology() const;

  Clause without(Literal l) const;
  Clause with(Literal l) const;
  Clause merged(const Clause& other) const;

  std::vector<int> to_dimacs() const;

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;

 private:
  std::vector<Literal> literals_;
};

inline bool is_tautology(const Clause& c) { return c.is_tautology(); }

std::string to_string(const Clause& c);

}  // namespace qproof

template <>
struct std::hash<qproof::Literal> {
  std::size_t operator()(qproof::Literal l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};

template <>
struct std::hash<qproof::Clause> {
  std::size_t operator()(const qproof::Clause& c) const noexcept;
};
