#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qproof/formula.hpp"

namespace qproof {

struct QdimacsOptions {
  /// Bind matrix variables missing from the prefix in an outermost
  /// existential block instead of rejecting the input.
  bool lenient = false;
};

/// Parses QDIMACS text. Throws ParseError (with line/column) on malformed
/// input, duplicate bindings, or unbound matrix variables in strict mode.
/// Adjacent blocks with the same quantifier are merged.
QbfFormula parse_qdimacs(std::istream& in, QdimacsOptions options = {});
QbfFormula parse_qdimacs(std::string_view text, QdimacsOptions options = {});
QbfFormula read_qdimacs_file(const std::string& path, QdimacsOptions options = {});

void write_qdimacs(std::ostream& out, const QbfFormula& f);
std::string write_qdimacs(const QbfFormula& f);

}  // namespace qproof
