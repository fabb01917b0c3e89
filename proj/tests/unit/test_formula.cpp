#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "qproof/error.hpp"
#include "qproof/formula.hpp"

using namespace qproof;

namespace {

Prefix eq1_prefix() {
  return Prefix::from_blocks({{Quantifier::Existential, {1, 2}},
                              {Quantifier::Universal, {3, 4}},
                              {Quantifier::Existential, {5}}});
}

}  // namespace

TEST_CASE("prefix levels and quantifiers") {
  const Prefix p = eq1_prefix();
  CHECK(p.blocks().size() == 3);
  CHECK(p.level(1) == 1);
  CHECK(p.level(4) == 2);
  CHECK(p.level(5) == 3);
  CHECK(p.is_universal(3));
  CHECK(p.is_existential(Literal::from_dimacs(-5)));
  CHECK(p.max_var() == 5);
  CHECK(p.num_bound() == 5);
  CHECK(p.variables() == std::vector<Var>{1, 2, 3, 4, 5});
  CHECK(p.universals() == std::vector<Var>{3, 4});
  CHECK_FALSE(p.is_bound(6));
  CHECK_THROWS_AS(p.level(6), UnboundVariable);
}

TEST_CASE("adjacent blocks with equal quantifiers merge") {
  const Prefix p = Prefix::from_blocks({{Quantifier::Existential, {1}},
                                        {Quantifier::Existential, {2}},
                                        {Quantifier::Universal, {}},
                                        {Quantifier::Universal, {3}}});
  REQUIRE(p.blocks().size() == 2);
  CHECK(p.blocks()[0].vars == std::vector<Var>{1, 2});
  CHECK(p.level(2) == 1);
  CHECK(p.level(3) == 2);
}

TEST_CASE("duplicate binding is rejected") {
  CHECK_THROWS_AS(Prefix::from_blocks({{Quantifier::Existential, {1}}, {Quantifier::Universal, {1}}}),
                  PreconditionError);
  CHECK_THROWS_AS(Prefix::from_blocks({{Quantifier::Existential, {0}}}), PreconditionError);
}

TEST_CASE("formula rejects unbound matrix variables") {
  CHECK_THROWS_AS(QbfFormula(eq1_prefix(), {Clause::from_dimacs({1, 9})}), UnboundVariable);
  const QbfFormula f(eq1_prefix(), {Clause::from_dimacs({1})}, 2);
  CHECK(f.num_vars() == 5);
}

TEST_CASE("existential and universal sub-clauses") {
  const Prefix p = eq1_prefix();
  CHECK(existential_subclause(Clause::from_dimacs({1, 2, 3, 4, 5}), p) == Clause::from_dimacs({1, 2, 5}));
  CHECK(existential_subclause(Clause::from_dimacs({3, -4}), p).empty());
  CHECK(existential_subclause(Clause::from_dimacs({-1, 5}), p) == Clause::from_dimacs({-1, 5}));
  CHECK_THROWS_AS(existential_subclause(Clause::from_dimacs({7}), p), UnboundVariable);
}

TEST_CASE("sub-clauses partition random clauses") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const QbfFormula f = testing::random_qbf(rng);
    for (const Clause& c : f.matrix()) {
      const Clause e = existential_subclause(c, f.prefix());
      const Clause u = universal_subclause(c, f.prefix());
      CHECK(e.merged(u) == c);
      CHECK(e.size() + u.size() == c.size());
    }
  }
}

TEST_CASE("with_outer_existentials binds at level 1") {
  const Prefix p = eq1_prefix().with_outer_existentials(std::vector<Var>{7});
  CHECK(p.level(7) == 1);
  CHECK(p.level(1) == 1);
  CHECK(p.level(5) == 3);
}
