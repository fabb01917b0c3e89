#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qproof/formula.hpp"
#include "qproof/qrat.hpp"

namespace qproof {

/// Fixed variable numbering of EQ^2(n); indices i, j are 1-based.
struct Eq2Vars {
  unsigned n;

  Var x(unsigned i) const { return i; }
  Var y(unsigned j) const { return n + j; }
  Var u(unsigned i) const { return 2 * n + i; }
  Var v(unsigned j) const { return 3 * n + j; }
  Var t(unsigned i, unsigned j) const { return 4 * n + (i - 1) * n + j; }
  Var num_vars() const { return 4 * n + n * n; }
};

struct Eq2Label {
  enum class Kind : std::uint8_t { C, CPrime, D, DPrime, T };
  Kind kind;
  unsigned i = 0;  // 0 for T
  unsigned j = 0;

  bool operator==(const Eq2Label&) const = default;
};

std::string to_string(const Eq2Label& label);

struct Eq2Instance {
  unsigned n;
  QbfFormula formula;
  /// labels[k] names matrix clause k.
  std::vector<Eq2Label> labels;
};

/// Prefix: exists x, y; forall u, v; exists t. Clauses C, C', D, D' for
/// each (i, j) in row-major order, then the single wide clause T.
/// Throws PreconditionError when n < 1.
Eq2Instance generate_eq2(unsigned n);

/// 12 n^2 steps: drop u then v from every labelled clause, derive each
/// unit t_ij in three AT steps, then shorten T one literal at a time down
/// to the empty clause.
QratProof emit_eq2_refutation(unsigned n);

}  // namespace qproof
