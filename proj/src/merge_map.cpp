#include "qproof/merge_map.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "qproof/semantics.hpp"

namespace qproof {

char to_char(LeafLabel label) {
  switch (label) {
    case LeafLabel::Positive:
      return '+';
    case LeafLabel::Negative:
      return '-';
    case LeafLabel::DontCare:
      return '*';
  }
  return '?';
}

MergeMap MergeMap::leaf(LineIndex index, LeafLabel label) {
  MergeMap m;
  m.root_ = index;
  m.rules_.emplace_back(index, Leaf{label});
  m.link();
  return m;
}

MergeMap MergeMap::from_rules(LineIndex root, std::vector<Entry> rules) {
  std::sort(rules.begin(), rules.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  MergeMap m;
  m.root_ = root;
  m.rules_ = std::move(rules);
  for (std::size_t i = 1; i < m.rules_.size(); ++i) {
    if (m.rules_[i].first == m.rules_[i - 1].first) {
      throw MergeMapError("duplicate rule for line " + std::to_string(m.rules_[i].first));
    }
  }
  if (!m.find(root)) throw MergeMapError("root " + std::to_string(root) + " has no rule");
  for (const auto& [index, rule] : m.rules_) {
    if (const auto* b = std::get_if<Branch>(&rule)) {
      for (LineIndex child : {b->low, b->high}) {
        if (child >= index) {
          throw MergeMapError("line " + std::to_string(index) + " points to non-smaller line " +
                              std::to_string(child));
        }
        if (!m.find(child)) throw MergeMapError("line " + std::to_string(child) + " has no rule");
      }
    }
  }
  m.link();
  return m;
}

std::uint32_t MergeMap::position(LineIndex index) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), index,
                             [](const Entry& e, LineIndex i) { return e.first < i; });
  if (it == rules_.end() || it->first != index) return kNone;
  return static_cast<std::uint32_t>(it - rules_.begin());
}

void MergeMap::link() {
  children_.assign(rules_.size(), {kNone, kNone});
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (const auto* b = std::get_if<Branch>(&rules_[k].second)) children_[k] = {position(b->low), position(b->high)};
  }
}

const Rule* MergeMap::find(LineIndex index) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), index,
                             [](const Entry& e, LineIndex i) { return e.first < i; });
  if (it == rules_.end() || it->first != index) return nullptr;
  return &it->second;
}

const Rule& MergeMap::at(LineIndex index) const {
  const Rule* r = find(index);
  if (!r) throw MergeMapError("no rule for line " + std::to_string(index));
  return *r;
}

bool MergeMap::is_trivial() const {
  const auto* l = std::get_if<Leaf>(&at(root_));
  return rules_.size() == 1 && l && l->label == LeafLabel::DontCare;
}

std::vector<Var> MergeMap::branch_variables() const {
  std::vector<Var> vars;
  std::vector<LineIndex> stack{root_};
  std::unordered_set<LineIndex> seen;
  while (!stack.empty()) {
    LineIndex i = stack.back();
    stack.pop_back();
    if (!seen.insert(i).second) continue;
    if (const auto* b = std::get_if<Branch>(&at(i))) {
      vars.push_back(b->var);
      stack.push_back(b->low);
      stack.push_back(b->high);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

LeafLabel evaluate_map(const MergeMap& m, const Assignment& a) {
  LineIndex i = m.root();
  for (;;) {
    const Rule& r = m.at(i);
    if (const auto* l = std::get_if<Leaf>(&r)) return l->label;
    const auto& b = std::get<Branch>(r);
    auto value = a.get(b.var);
    if (!value) throw MergeMapError("branch variable " + std::to_string(b.var) + " is unassigned");
    i = *value ? b.high : b.low;
  }
}

// Simultaneous traversal over rule positions, so each rule is visited once.
bool is_isomorphic(const MergeMap& a, const MergeMap& b) {
  constexpr std::uint32_t kNone = MergeMap::kNone;
  std::vector<std::uint32_t> forward(a.size(), kNone);
  std::vector<std::uint32_t> backward(b.size(), kNone);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{a.position(a.root()), b.position(b.root())}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (forward[i] != kNone || backward[j] != kNone) {
      // Already paired: the pairing must be exactly this one.
      if (forward[i] != j || backward[j] != i) return false;
      continue;
    }
    forward[i] = j;
    backward[j] = i;
    const Rule& ri = a.rules_[i].second;
    const Rule& rj = b.rules_[j].second;
    if (ri.index() != rj.index()) return false;
    if (const auto* li = std::get_if<Leaf>(&ri)) {
      if (li->label != std::get<Leaf>(rj).label) return false;
      continue;
    }
    if (std::get<Branch>(ri).var != std::get<Branch>(rj).var) return false;
    stack.emplace_back(a.children_[i].first, b.children_[j].first);
    stack.emplace_back(a.children_[i].second, b.children_[j].second);
  }
  return true;
}

bool is_consistent(const MergeMap& a, const MergeMap& b) {
  auto ia = a.rules().begin();
  auto ib = b.rules().begin();
  while (ia != a.rules().end() && ib != b.rules().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

std::optional<MergeMap> try_select(const MergeMap& a, const MergeMap& b) {
  if (a.is_trivial() || b.is_trivial() || is_isomorphic(a, b)) return a.is_trivial() ? b : a;
  return std::nullopt;
}

MergeMap select(const MergeMap& a, const MergeMap& b) {
  auto s = try_select(a, b);
  if (!s) throw MergeMapError("select is undefined: maps are neither isomorphic nor trivial");
  return *s;
}

MergeMap merge(const MergeMap& a, const MergeMap& b, LineIndex index, Var var) {
  if (index <= a.max_index() || index <= b.max_index()) {
    throw MergeMapError("merge index " + std::to_string(index) + " is not fresh");
  }
  if (!is_consistent(a, b)) throw MergeMapError("merge of inconsistent maps");
  std::vector<MergeMap::Entry> rules;
  rules.reserve(a.size() + b.size() + 1);
  auto ia = a.rules().begin();
  auto ib = b.rules().begin();
  while (ia != a.rules().end() || ib != b.rules().end()) {
    if (ib == b.rules().end() || (ia != a.rules().end() && ia->first < ib->first)) {
      rules.push_back(*ia++);
    } else if (ia == a.rules().end() || ib->first < ia->first) {
      rules.push_back(*ib++);
    } else {
      rules.push_back(*ia++);
      ++ib;
    }
  }
  rules.emplace_back(index, Branch{var, a.root(), b.root()});
  // Sorted by construction.
  MergeMap m;
  m.root_ = index;
  m.rules_ = std::move(rules);
  m.link();
  return m;
}

}  // namespace qproof
