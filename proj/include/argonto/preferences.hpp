#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argonto/attacks.hpp"
#include "argonto/engine.hpp"
#include "argonto/ontology.hpp"

namespace argonto {

// Democratic last-link comparison. Arguments are weighed by the principles
// behind their last-applied norms: every principle on the left must be capped
// by one on the right. Norm-free arguments (empty set) sit strictly above all
// norm-carrying ones and tie with each other.
inline bool principle_set_leq(const std::set<std::string>& left,
                              const std::set<std::string>& right,
                              const PriorityOrder& order) {
  if (left.empty()) return right.empty();
  if (right.empty()) return true;
  for (const auto& p : left) {
    bool capped = false;
    for (const auto& q : right)
      if (order.leq(p, q)) {
        capped = true;
        break;
      }
    if (!capped) return false;
  }
  return true;
}

inline bool principle_set_less(const std::set<std::string>& left,
                               const std::set<std::string>& right,
                               const PriorityOrder& order) {
  return principle_set_leq(left, right, order) && !principle_set_leq(right, left, order);
}

// The defeat relation induced by an attack set: undercuts always succeed,
// rebuttals and underminings succeed unless the attacker is strictly less
// preferred than the attacked argument as a whole.
struct DefeatGraph {
  int n = 0;
  std::vector<Attack> attacks;
  std::vector<std::pair<int, int>> defeats;  // sorted, deduplicated
  std::vector<std::vector<int>> defeaters_of;

  bool defeat(int a, int b) const {
    return std::binary_search(defeats.begin(), defeats.end(), std::make_pair(a, b));
  }
};

inline DefeatGraph compute_defeats(const ArgumentStore& store, std::vector<Attack> attacks,
                                   const PriorityOrder& order) {
  DefeatGraph g;
  g.n = static_cast<int>(store.size());
  g.attacks = std::move(attacks);
  std::set<std::pair<int, int>> pairs;
  for (const auto& at : g.attacks) {
    if (at.kind != AttackKind::Undercut &&
        principle_set_less(store[at.attacker].last_principles,
                           store[at.target].last_principles, order))
      continue;
    pairs.emplace(at.attacker, at.target);
  }
  g.defeats.assign(pairs.begin(), pairs.end());
  g.defeaters_of.resize(static_cast<size_t>(g.n));
  for (const auto& [a, b] : g.defeats) g.defeaters_of[static_cast<size_t>(b)].push_back(a);
  return g;
}

}  // namespace argonto
