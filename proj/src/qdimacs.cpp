#include "qproof/qdimacs.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "line_tokens.hpp"
#include "qproof/error.hpp"

namespace qproof {

using detail::parse_integer;
using detail::split_tokens;

QbfFormula parse_qdimacs(std::istream& in, QdimacsOptions options) {
  detail::LineReader reader(in);
  std::optional<long long> declared_vars;
  long long declared_clauses = 0;
  std::vector<QuantifierBlock> blocks;
  std::set<Var> bound;
  std::vector<Clause> matrix;
  std::vector<Literal> pending;
  bool in_clause = false;
  std::size_t pending_line = 0;
  std::set<Var> unbound;

  while (reader.next()) {
    const std::size_t line_no = reader.line_no();
    auto tokens = split_tokens(reader.line());
    if (tokens.empty()) continue;
    const std::string_view head = tokens.front().text;
    if (head[0] == 'c') continue;

    if (head == "p") {
      if (declared_vars) throw ParseError(line_no, tokens[0].column, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1].text != "cnf") {
        throw ParseError(line_no, tokens[0].column, "expected 'p cnf <vars> <clauses>'");
      }
      declared_vars = parse_integer(tokens[2], line_no);
      declared_clauses = parse_integer(tokens[3], line_no);
      if (*declared_vars < 0 || *declared_vars > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, tokens[2].column, "variable count out of range");
      }
      if (declared_clauses < 0) throw ParseError(line_no, tokens[3].column, "negative clause count");
      continue;
    }
    if (!declared_vars) throw ParseError(line_no, tokens[0].column, "missing problem line before content");

    if (head == "a" || head == "e") {
      if (!matrix.empty() || in_clause) {
        throw ParseError(line_no, tokens[0].column, "quantifier line after the first clause");
      }
      QuantifierBlock block{head == "a" ? Quantifier::Universal : Quantifier::Existential, {}};
      bool terminated = false;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (terminated) throw ParseError(line_no, tokens[i].column, "content after terminating 0");
        long long v = parse_integer(tokens[i], line_no);
        if (v == 0) {
          terminated = true;
          continue;
        }
        if (v < 0 || v > *declared_vars) {
          throw ParseError(line_no, tokens[i].column, "quantified variable out of range: " + std::to_string(v));
        }
        if (!bound.insert(static_cast<Var>(v)).second) {
          throw ParseError(line_no, tokens[i].column, "variable " + std::to_string(v) + " bound twice");
        }
        block.vars.push_back(static_cast<Var>(v));
      }
      if (!terminated) throw ParseError(line_no, 0, "quantifier line not terminated by 0");
      blocks.push_back(std::move(block));
      continue;
    }

    // Clause data; a clause may span several lines.
    for (const auto& tok : tokens) {
      long long v = parse_integer(tok, line_no);
      if (v == 0) {
        matrix.emplace_back(std::move(pending));
        pending.clear();
        in_clause = false;
        continue;
      }
      long long magnitude = v < 0 ? -v : v;
      if (magnitude > *declared_vars) {
        throw ParseError(line_no, tok.column, "literal out of range: " + std::to_string(v));
      }
      if (!bound.count(static_cast<Var>(magnitude))) {
        if (!options.lenient) {
          throw ParseError(line_no, tok.column, "variable " + std::to_string(magnitude) + " is not quantified");
        }
        unbound.insert(static_cast<Var>(magnitude));
      }
      if (!in_clause) pending_line = line_no;
      in_clause = true;
      pending.push_back(Literal::from_dimacs(v));
    }
  }

  if (!declared_vars) throw ParseError(reader.line_no() + 1, 0, "missing problem line");
  if (in_clause) throw ParseError(pending_line, 0, "clause not terminated by 0");
  if (static_cast<long long>(matrix.size()) != declared_clauses) {
    throw ParseError(reader.line_no(), 0,
                     "expected " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(matrix.size()));
  }

  Prefix prefix = Prefix::from_blocks(std::move(blocks));
  if (!unbound.empty()) {
    std::vector<Var> free_vars(unbound.begin(), unbound.end());
    prefix = prefix.with_outer_existentials(free_vars);
  }
  return QbfFormula(std::move(prefix), std::move(matrix), static_cast<Var>(*declared_vars));
}

QbfFormula parse_qdimacs(std::string_view text, QdimacsOptions options) {
  std::istringstream in{std::string(text)};
  return parse_qdimacs(in, options);
}

QbfFormula read_qdimacs_file(const std::string& path, QdimacsOptions options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_qdimacs(in, options);
}

void write_qdimacs(std::ostream& out, const QbfFormula& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.matrix().size() << '\n';
  for (const auto& block : f.prefix().blocks()) {
    out << (block.quantifier == Quantifier::Universal ? 'a' : 'e');
    for (Var v : block.vars) out << ' ' << v;
    out << " 0\n";
  }
  for (const auto& c : f.matrix()) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string write_qdimacs(const QbfFormula& f) {
  std::ostringstream out;
  write_qdimacs(out, f);
  return out.str();
}

}  // namespace qproof
