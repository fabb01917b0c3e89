#include <doctest.h>

#include <map>
#include <random>

#include "qproof/merge_map.hpp"
#include "qproof/semantics.hpp"

using namespace qproof;

namespace {

constexpr LeafLabel kNeg = LeafLabel::Negative;
constexpr LeafLabel kPos = LeafLabel::Positive;
constexpr LeafLabel kStar = LeafLabel::DontCare;

MergeMap leaf(LineIndex i, LeafLabel l) { return MergeMap::leaf(i, l); }

// {1 -> not u, 2 -> u, 3 -> (x, 1, 2)}
MergeMap if_x(Var x, LineIndex base = 0) {
  return MergeMap::from_rules(base + 3, {{base + 1, Leaf{kNeg}}, {base + 2, Leaf{kPos}}, {base + 3, Branch{x, base + 1, base + 2}}});
}

// A pool of rules indexed by line; every map drawn from it is consistent
// with every other one.
class RuleUniverse {
 public:
  RuleUniverse(std::mt19937_64& rng, unsigned num_vars) : rng_(rng), num_vars_(num_vars) {}

  LineIndex add_leaf() {
    static constexpr LeafLabel kLabels[] = {kNeg, kPos, kStar};
    return add(Leaf{kLabels[std::uniform_int_distribution<int>(0, 2)(rng_)]});
  }
  LineIndex add_branch() {
    std::uniform_int_distribution<LineIndex> child(1, next_ - 1);
    return add(Branch{std::uniform_int_distribution<Var>(1, num_vars_)(rng_), child(rng_), child(rng_)});
  }
  LineIndex fresh() { return next_++; }

  MergeMap map_at(LineIndex root) const {
    std::vector<MergeMap::Entry> rules;
    std::vector<LineIndex> stack{root};
    std::map<LineIndex, bool> seen;
    while (!stack.empty()) {
      const LineIndex i = stack.back();
      stack.pop_back();
      if (seen[i]) continue;
      seen[i] = true;
      rules.emplace_back(i, rules_.at(i));
      if (const auto* b = std::get_if<Branch>(&rules_.at(i))) {
        stack.push_back(b->low);
        stack.push_back(b->high);
      }
    }
    return MergeMap::from_rules(root, std::move(rules));
  }

  // Reference evaluation straight from the rule table.
  LeafLabel eval(LineIndex i, unsigned bits) const {
    const Rule& r = rules_.at(i);
    if (const auto* l = std::get_if<Leaf>(&r)) return l->label;
    const auto& b = std::get<Branch>(r);
    return eval(((bits >> (b.var - 1)) & 1u) ? b.high : b.low, bits);
  }

 private:
  LineIndex add(Rule r) {
    rules_.emplace(next_, r);
    return next_++;
  }

  std::mt19937_64& rng_;
  unsigned num_vars_;
  std::map<LineIndex, Rule> rules_;
  LineIndex next_ = 1;
};

Assignment from_bits(unsigned bits, unsigned num_vars) {
  Assignment a(num_vars);
  for (unsigned v = 1; v <= num_vars; ++v) a.set(v, (bits >> (v - 1)) & 1u);
  return a;
}

// Same graph under an order-preserving renumbering of its lines.
MergeMap shifted(const MergeMap& m, LineIndex offset, LineIndex stride) {
  auto f = [&](LineIndex i) { return offset + stride * i; };
  std::vector<MergeMap::Entry> rules;
  for (const auto& [i, r] : m.rules()) {
    if (const auto* b = std::get_if<Branch>(&r)) {
      rules.emplace_back(f(i), Branch{b->var, f(b->low), f(b->high)});
    } else {
      rules.emplace_back(f(i), r);
    }
  }
  return MergeMap::from_rules(f(m.root()), std::move(rules));
}

}  // namespace

TEST_CASE("evaluate_map examples") {
  Assignment a(1);
  a.set(1, true);
  CHECK(evaluate_map(leaf(1, kNeg), a) == kNeg);
  CHECK(evaluate_map(if_x(1), a) == kPos);
  a.set(1, false);
  CHECK(evaluate_map(if_x(1), a) == kNeg);
  CHECK(evaluate_map(leaf(1, kStar), a) == kStar);
  CHECK_THROWS_AS(evaluate_map(if_x(2), a), MergeMapError);
}

TEST_CASE("isomorphism examples") {
  CHECK(is_isomorphic(leaf(1, kNeg), leaf(7, kNeg)));
  CHECK(is_isomorphic(if_x(1), if_x(1, 3)));
  CHECK_FALSE(is_isomorphic(leaf(1, kNeg), leaf(1, kPos)));
  CHECK_FALSE(is_isomorphic(if_x(1), if_x(2, 3)));
  CHECK_FALSE(is_isomorphic(if_x(1), leaf(1, kNeg)));
}

TEST_CASE("isomorphism needs a bijection, not just equal behaviour") {
  // Two distinct leaves with the same label vs one shared leaf.
  const MergeMap two = MergeMap::from_rules(3, {{1, Leaf{kNeg}}, {2, Leaf{kNeg}}, {3, Branch{1, 1, 2}}});
  const MergeMap one = MergeMap::from_rules(3, {{1, Leaf{kNeg}}, {3, Branch{1, 1, 1}}});
  CHECK_FALSE(is_isomorphic(two, one));
  CHECK_FALSE(is_isomorphic(one, two));
  CHECK(is_isomorphic(one, one));
}

TEST_CASE("consistency examples") {
  CHECK(is_consistent(leaf(1, kNeg), leaf(2, kPos)));
  const MergeMap m = MergeMap::from_rules(2, {{1, Leaf{kNeg}}, {2, Branch{1, 1, 1}}});
  CHECK(is_consistent(leaf(1, kNeg), m));
  CHECK_FALSE(is_consistent(leaf(1, kNeg), leaf(1, kPos)));
}

TEST_CASE("select examples") {
  CHECK(select(leaf(1, kStar), leaf(2, kNeg)) == leaf(2, kNeg));
  CHECK(select(leaf(1, kNeg), leaf(5, kNeg)) == leaf(1, kNeg));
  CHECK(select(leaf(1, kStar), leaf(2, kStar)) == leaf(2, kStar));
  CHECK(select(leaf(1, kNeg), leaf(2, kStar)) == leaf(1, kNeg));
  CHECK_FALSE(try_select(leaf(1, kNeg), leaf(2, kPos)).has_value());
  CHECK_THROWS_AS(select(leaf(1, kNeg), leaf(2, kPos)), MergeMapError);
}

TEST_CASE("merge examples") {
  const MergeMap m = merge(leaf(1, kNeg), leaf(2, kPos), 3, 1);
  CHECK(m == if_x(1));
  const MergeMap shared = merge(leaf(1, kNeg), leaf(1, kNeg), 3, 1);
  CHECK(shared.size() == 2);
  CHECK(shared.root() == 3);
  CHECK(std::get<Branch>(shared.at(3)) == Branch{1, 1, 1});
  CHECK_THROWS_AS(merge(leaf(1, kNeg), leaf(1, kPos), 3, 1), MergeMapError);
  CHECK_THROWS_AS(merge(leaf(1, kNeg), leaf(2, kPos), 2, 1), MergeMapError);
}

TEST_CASE("rule validation") {
  CHECK_THROWS_AS(MergeMap::from_rules(2, {{1, Leaf{kNeg}}}), MergeMapError);
  CHECK_THROWS_AS(MergeMap::from_rules(2, {{2, Branch{1, 1, 2}}, {1, Leaf{kNeg}}}), MergeMapError);
  CHECK_THROWS_AS(MergeMap::from_rules(2, {{2, Branch{1, 1, 3}}, {1, Leaf{kNeg}}}), MergeMapError);
  CHECK_THROWS_AS(MergeMap::from_rules(1, {{1, Leaf{kNeg}}, {1, Leaf{kPos}}}), MergeMapError);
  CHECK(leaf(4, kStar).is_trivial());
  CHECK_FALSE(leaf(4, kNeg).is_trivial());
  CHECK(if_x(2).branch_variables() == std::vector<Var>{2});
}

TEST_CASE("merge realizes if-then-else, exhaustively") {
  std::mt19937_64 rng(17);
  constexpr unsigned kVars = 6;
  for (int round = 0; round < 40; ++round) {
    RuleUniverse u(rng, kVars);
    std::vector<LineIndex> nodes;
    for (int k = 0; k < 4; ++k) nodes.push_back(u.add_leaf());
    for (int k = 0; k < 12; ++k) nodes.push_back(u.add_branch());
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    for (int k = 0; k < 10; ++k) {
      const MergeMap a = u.map_at(nodes[pick(rng)]);
      const MergeMap b = u.map_at(nodes[pick(rng)]);
      REQUIRE(is_consistent(a, b));
      const Var x = std::uniform_int_distribution<Var>(1, kVars)(rng);
      const MergeMap m = merge(a, b, u.fresh(), x);
      for (unsigned bits = 0; bits < (1u << kVars); ++bits) {
        const Assignment asg = from_bits(bits, kVars);
        const bool x_true = (bits >> (x - 1)) & 1u;
        CHECK(evaluate_map(m, asg) == evaluate_map(x_true ? b : a, asg));
        CHECK(evaluate_map(a, asg) == u.eval(a.root(), bits));
      }
    }
  }
}

TEST_CASE("isomorphic maps evaluate identically, exhaustively") {
  std::mt19937_64 rng(23);
  constexpr unsigned kVars = 6;
  int non_iso = 0;
  for (int round = 0; round < 40; ++round) {
    RuleUniverse u(rng, kVars);
    std::vector<LineIndex> nodes;
    for (int k = 0; k < 3; ++k) nodes.push_back(u.add_leaf());
    for (int k = 0; k < 10; ++k) nodes.push_back(u.add_branch());
    for (LineIndex root : nodes) {
      const MergeMap m = u.map_at(root);
      const MergeMap copy = shifted(m, 100, 3);
      REQUIRE(is_isomorphic(m, copy));
      REQUIRE(is_isomorphic(copy, m));
      CHECK(select(m, copy) == (m.is_trivial() ? copy : m));
      for (unsigned bits = 0; bits < (1u << kVars); ++bits) {
        const Assignment asg = from_bits(bits, kVars);
        CHECK(evaluate_map(m, asg) == evaluate_map(copy, asg));
      }
      const MergeMap other = u.map_at(nodes[(root * 7) % nodes.size()]);
      if (!is_isomorphic(m, other)) {
        ++non_iso;
        continue;
      }
      for (unsigned bits = 0; bits < (1u << kVars); ++bits) {
        const Assignment asg = from_bits(bits, kVars);
        CHECK(evaluate_map(m, asg) == evaluate_map(other, asg));
      }
    }
  }
  CHECK(non_iso > 0);
}
