#include "qproof/squaredeq.hpp"

#include "qproof/error.hpp"

namespace qproof {

std::string to_string(const Eq2Label& label) {
  const std::string ij = "(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
  switch (label.kind) {
    case Eq2Label::Kind::C:
      return "C" + ij;
    case Eq2Label::Kind::CPrime:
      return "C'" + ij;
    case Eq2Label::Kind::D:
      return "D" + ij;
    case Eq2Label::Kind::DPrime:
      return "D'" + ij;
    case Eq2Label::Kind::T:
      return "T";
  }
  return "?";
}

namespace {

void require_positive(unsigned n) {
  if (n < 1) throw PreconditionError("EQ2 needs n >= 1");
}

struct Row {
  Eq2Label::Kind kind;
  bool x_neg;  // polarity of x_i and u_i
  bool y_neg;  // polarity of y_j and v_j
};

constexpr Row kRows[] = {
    {Eq2Label::Kind::C, false, false},
    {Eq2Label::Kind::CPrime, false, true},
    {Eq2Label::Kind::D, true, false},
    {Eq2Label::Kind::DPrime, true, true},
};

}  // namespace

Eq2Instance generate_eq2(unsigned n) {
  require_positive(n);
  const Eq2Vars var{n};
  std::vector<Var> xy, uv, ts;
  for (unsigned i = 1; i <= n; ++i) xy.push_back(var.x(i));
  for (unsigned j = 1; j <= n; ++j) xy.push_back(var.y(j));
  for (unsigned i = 1; i <= n; ++i) uv.push_back(var.u(i));
  for (unsigned j = 1; j <= n; ++j) uv.push_back(var.v(j));
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) ts.push_back(var.t(i, j));
  }

  std::vector<Clause> matrix;
  std::vector<Eq2Label> labels;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      for (const Row& row : kRows) {
        matrix.push_back(Clause{Literal(var.x(i), row.x_neg), Literal(var.y(j), row.y_neg),
                                Literal(var.u(i), row.x_neg), Literal(var.v(j), row.y_neg),
                                Literal(var.t(i, j), false)});
        labels.push_back({row.kind, i, j});
      }
    }
  }
  std::vector<Literal> t_clause;
  for (Var t : ts) t_clause.emplace_back(t, true);
  matrix.emplace_back(std::move(t_clause));
  labels.push_back({Eq2Label::Kind::T, 0, 0});

  Prefix prefix = Prefix::from_blocks({{Quantifier::Existential, std::move(xy)},
                                       {Quantifier::Universal, std::move(uv)},
                                       {Quantifier::Existential, std::move(ts)}});
  return Eq2Instance{n, QbfFormula(std::move(prefix), std::move(matrix), var.num_vars()), std::move(labels)};
}

QratProof emit_eq2_refutation(unsigned n) {
  require_positive(n);
  const Eq2Vars var{n};
  const Eq2Instance inst = generate_eq2(n);
  QratProof proof;
  auto& steps = proof.steps;
  steps.reserve(12 * n * n);

  for (std::size_t k = 0; k + 1 < inst.formula.matrix().size(); ++k) {
    const Clause& c = inst.formula.matrix()[k];
    const Eq2Label& label = inst.labels[k];
    const Literal u = c.contains(Literal(var.u(label.i), false)) ? Literal(var.u(label.i), false)
                                                                  : Literal(var.u(label.i), true);
    const Literal v = c.contains(Literal(var.v(label.j), false)) ? Literal(var.v(label.j), false)
                                                                  : Literal(var.v(label.j), true);
    steps.push_back(QratStep::ureduce(c, u));
    steps.push_back(QratStep::ureduce(c.without(u), v));
  }

  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const Literal t(var.t(i, j), false);
      steps.push_back(QratStep::add(Clause{Literal(var.x(i), false), t}));
      steps.push_back(QratStep::add(Clause{Literal(var.x(i), true), t}));
      steps.push_back(QratStep::add(Clause{t}));
    }
  }

  Clause rest = inst.formula.matrix().back();
  while (!rest.empty()) {
    rest = rest.without(rest[0]);
    steps.push_back(QratStep::add(rest));
  }
  return proof;
}

}  // namespace qproof
