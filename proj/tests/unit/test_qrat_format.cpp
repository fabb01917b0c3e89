#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "qproof/error.hpp"
#include "qproof/qrat.hpp"
#include "qproof/squaredeq.hpp"

using namespace qproof;

namespace {

Literal lit(int v) { return Literal::from_dimacs(v); }

std::size_t error_line(std::string_view text) {
  try {
    parse_qrat(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("step lines") {
  QratProof p = parse_qrat("1 2 0\n");
  REQUIRE(p.steps.size() == 1);
  CHECK(p.steps[0].kind == StepKind::Add);
  CHECK(p.steps[0].clause == Clause::from_dimacs({1, 2}));
  CHECK(p.steps[0].pivot == lit(1));

  p = parse_qrat("d 1 2 0\n");
  CHECK(p.steps[0].kind == StepKind::Delete);
  CHECK(p.steps[0].clause == Clause::from_dimacs({1, 2}));
  CHECK_FALSE(p.steps[0].pivot.has_value());

  p = parse_qrat("u 3 1 2 0\n");
  CHECK(p.steps[0].kind == StepKind::UReduce);
  CHECK(p.steps[0].clause == Clause::from_dimacs({1, 2, 3}));
  CHECK(p.steps[0].pivot == lit(3));

  p = parse_qrat("-2 1 0\n0\n");
  CHECK(p.steps[0].pivot == lit(-2));
  CHECK(p.steps[1].clause.empty());
  CHECK_FALSE(p.steps[1].pivot.has_value());
}

TEST_CASE("comments, blank lines and the formula directive") {
  const QratProof p = parse_qrat("c a comment\n\nc formula some/dir/f.qdimacs\n  1 0  \nc\n");
  CHECK(p.steps.size() == 1);
  CHECK(p.formula_ref == "some/dir/f.qdimacs");
  CHECK_FALSE(parse_qrat("c formulas x\n1 0\n").formula_ref.has_value());
}

TEST_CASE("malformed lines report their line number") {
  CHECK(error_line("1 0\n2 3\n") == 2);
  CHECK(error_line("1 0\n1 0 2\n") == 2);
  CHECK(error_line("x 1 0\n") == 1);
  CHECK(error_line("1 0\n\nu 0\n") == 3);
  CHECK(error_line("1 1.5 0\n") == 1);
  CHECK(error_line("99999999999 0\n") == 1);
  CHECK(error_line("1 0\n2 0\n3") == 3);
}

TEST_CASE("writer puts the pivot first") {
  const QratProof p{{QratStep::add(Clause::from_dimacs({1, 2, 3}), lit(3)), QratStep::ureduce(Clause::from_dimacs({-1, 4}), lit(4)),
                     QratStep::remove(Clause::from_dimacs({2, 1})), QratStep::add(Clause{})},
                    "f.qdimacs"};
  CHECK(write_qrat(p) == "c formula f.qdimacs\n3 1 2 0\nu 4 -1 0\nd 1 2 0\n0\n");
}

TEST_CASE("write then parse is the identity") {
  for (unsigned n = 1; n <= 4; ++n) {
    const QratProof p = emit_eq2_refutation(n);
    CHECK(parse_qrat(write_qrat(p)) == p);
  }
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const QbfFormula f = testing::random_qbf(rng);
    QratProof p;
    for (int s = 0; s < 10; ++s) p.steps.push_back(testing::propose_step(rng, f, f.matrix()));
    if (k % 2) p.formula_ref = "dir/f" + std::to_string(k) + ".qdimacs";
    CHECK(parse_qrat(write_qrat(p)) == p);
  }
}
