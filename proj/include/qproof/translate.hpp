#pragma once

#include "qproof/mres.hpp"
#include "qproof/qrat.hpp"

namespace qproof {

/// Compiles an MRes refutation into a QRAT refutation of the same formula:
/// one addition per MRes line, carrying that line's clause, so the output
/// has exactly as many steps as `p` has lines. Every addition is AT under
/// universal-aware propagation. Throws PreconditionError unless `p` is a
/// verified refutation of `f`.
QratProof translate(const QbfFormula& f, const MResProof& p);

}  // namespace qproof
