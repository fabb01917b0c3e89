#include <limits>
#include <sstream>

#include "line_tokens.hpp"
#include "qproof/error.hpp"
#include "qproof/mres.hpp"

namespace qproof {

namespace {

using detail::Token;

std::uint32_t parse_positive(const Token& tok, std::size_t line_no, const char* what) {
  const long long v = detail::parse_integer(tok, line_no);
  if (v <= 0 || v > std::numeric_limits<std::int32_t>::max()) {
    throw ParseError(line_no, tok.column, std::string(what) + " must be a positive integer");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

MResProof parse_mres(std::istream& in) {
  detail::LineReader reader(in);
  MResProof proof;
  bool seen_header = false;
  while (reader.next()) {
    const std::size_t line_no = reader.line_no();
    const auto tokens = detail::split_tokens(reader.line());
    if (tokens.empty() || tokens[0].text[0] == 'c') continue;

    if (tokens[0].text == "p") {
      if (seen_header || !proof.lines.empty()) throw ParseError(line_no, tokens[0].column, "misplaced header");
      if (tokens.size() < 2 || tokens[1].text != "mres") throw ParseError(line_no, tokens[0].column, "expected 'p mres'");
      if (tokens.size() > 3) throw ParseError(line_no, tokens[3].column, "unexpected token in header");
      if (tokens.size() == 3) proof.formula_ref = std::string(tokens[2].text);
      seen_header = true;
      continue;
    }

    // Justification tokens end at an optional '=' clause claim.
    std::size_t end = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].text == "=") {
        end = i;
        break;
      }
    }
    if (end < 3) throw ParseError(line_no, 0, "incomplete proof line");

    MResLine line;
    line.index = parse_positive(tokens[0], line_no, "line index");
    const std::string_view kind = tokens[1].text;
    if (kind == "a") {
      if (end != 3) throw ParseError(line_no, tokens[3].column, "unexpected token after axiom");
      line.justification = Axiom{parse_positive(tokens[2], line_no, "input clause number")};
    } else if (kind == "r") {
      if (end < 5) throw ParseError(line_no, 0, "resolution needs two lines and a pivot");
      Resolution r{parse_positive(tokens[2], line_no, "line reference"), parse_positive(tokens[3], line_no, "line reference"),
                   parse_positive(tokens[4], line_no, "pivot"), {}};
      if (end > 5) {
        if (tokens[5].text != "m") throw ParseError(line_no, tokens[5].column, "expected 'm'");
        if (end == 6) throw ParseError(line_no, tokens[5].column, "'m' without variables");
        for (std::size_t i = 6; i < end; ++i) r.forced_merge.push_back(parse_positive(tokens[i], line_no, "variable"));
      }
      line.justification = std::move(r);
    } else {
      throw ParseError(line_no, tokens[1].column, "expected 'a' or 'r'");
    }

    if (end < tokens.size()) {
      std::vector<Literal> lits;
      bool terminated = false;
      for (std::size_t i = end + 1; i < tokens.size(); ++i) {
        if (terminated) throw ParseError(line_no, tokens[i].column, "content after terminating 0");
        const long long v = detail::parse_integer(tokens[i], line_no);
        if (v == 0) {
          terminated = true;
        } else if (v > std::numeric_limits<std::int32_t>::max() || v < -std::numeric_limits<std::int32_t>::max()) {
          throw ParseError(line_no, tokens[i].column, "literal out of range");
        } else {
          lits.push_back(Literal::from_dimacs(v));
        }
      }
      if (!terminated) throw ParseError(line_no, 0, "clause claim not terminated by 0");
      line.clause = Clause(std::move(lits));
    }
    proof.lines.push_back(std::move(line));
  }
  return proof;
}

MResProof parse_mres(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mres(in);
}

void write_mres(std::ostream& out, const MResProof& p) {
  out << "p mres";
  if (p.formula_ref) out << ' ' << *p.formula_ref;
  out << '\n';
  for (const auto& line : p.lines) {
    out << line.index;
    if (const auto* ax = std::get_if<Axiom>(&line.justification)) {
      out << " a " << ax->input_clause;
    } else {
      const auto& r = std::get<Resolution>(line.justification);
      out << " r " << r.a << ' ' << r.b << ' ' << r.pivot;
      if (!r.forced_merge.empty()) {
        out << " m";
        for (Var u : r.forced_merge) out << ' ' << u;
      }
    }
    if (line.clause) {
      out << " =";
      for (Literal l : *line.clause) out << ' ' << l.to_dimacs();
      out << " 0";
    }
    out << '\n';
  }
}

std::string write_mres(const MResProof& p) {
  std::ostringstream out;
  write_mres(out, p);
  return out.str();
}

}  // namespace qproof
