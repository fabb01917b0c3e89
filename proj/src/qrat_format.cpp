#include <limits>
#include <sstream>

#include "line_tokens.hpp"
#include "qproof/error.hpp"
#include "qproof/qrat.hpp"

namespace qproof {

namespace {

constexpr std::string_view kFormulaDirective = "formula";

}  // namespace

QratProof parse_qrat(std::istream& in) {
  detail::LineReader reader(in);
  QratProof proof;
  while (reader.next()) {
    const std::size_t line_no = reader.line_no();
    const auto tokens = detail::split_tokens(reader.line());
    if (tokens.empty()) continue;
    if (tokens[0].text[0] == 'c') {
      if (tokens.size() >= 3 && tokens[0].text == "c" && tokens[1].text == kFormulaDirective) {
        proof.formula_ref = std::string(tokens[2].text);
      }
      continue;
    }

    StepKind kind = StepKind::Add;
    std::size_t first = 0;
    if (tokens[0].text == "d") {
      kind = StepKind::Delete;
      first = 1;
    } else if (tokens[0].text == "u") {
      kind = StepKind::UReduce;
      first = 1;
    }

    std::vector<Literal> lits;
    bool terminated = false;
    for (std::size_t i = first; i < tokens.size(); ++i) {
      if (terminated) throw ParseError(line_no, tokens[i].column, "content after terminating 0");
      const long long v = detail::parse_integer(tokens[i], line_no);
      if (v == 0) {
        terminated = true;
        continue;
      }
      if (v > std::numeric_limits<int>::max() || v < -std::numeric_limits<int>::max()) {
        throw ParseError(line_no, tokens[i].column, "literal out of range");
      }
      lits.push_back(Literal::from_dimacs(v));
    }
    if (!terminated) throw ParseError(line_no, 0, "step not terminated by 0");

    QratStep step;
    step.kind = kind;
    if (kind != StepKind::Delete && !lits.empty()) step.pivot = lits.front();
    if (kind == StepKind::UReduce && lits.empty()) {
      throw ParseError(line_no, tokens[0].column, "reduction step without a pivot");
    }
    step.clause = Clause(std::move(lits));
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

QratProof parse_qrat(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qrat(in);
}

void write_qrat(std::ostream& out, const QratProof& p) {
  if (p.formula_ref) out << "c " << kFormulaDirective << ' ' << *p.formula_ref << '\n';
  for (const auto& step : p.steps) {
    if (step.kind == StepKind::Delete) out << "d ";
    if (step.kind == StepKind::UReduce) out << "u ";
    if (step.pivot) out << step.pivot->to_dimacs() << ' ';
    for (Literal l : step.clause) {
      if (!step.pivot || l != *step.pivot) out << l.to_dimacs() << ' ';
    }
    out << "0\n";
  }
}

std::string write_qrat(const QratProof& p) {
  std::ostringstream out;
  write_qrat(out, p);
  return out.str();
}

}  // namespace qproof
