#include "qproof/translate.hpp"

#include "qproof/error.hpp"

namespace qproof {

QratProof translate(const QbfFormula& f, const MResProof& p) {
  const MResReport report = check_proof(f, p);
  if (report.verdict != Verdict::VerifiedRefutation) {
    std::string why = report.reason ? std::string(to_code(*report.reason)) : "no empty clause";
    throw PreconditionError("cannot translate an unverified MRes proof (" + why + ")");
  }
  QratProof out;
  out.formula_ref = p.formula_ref;
  out.steps.reserve(report.lines.size());
  for (const auto& line : report.lines) out.steps.push_back(QratStep::add(line.clause));
  return out;
}

}  // namespace qproof
