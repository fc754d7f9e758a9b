#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "argonto/engine.hpp"
#include "argonto/theory.hpp"

namespace argonto {

enum class AttackKind { Undercut, Rebut, Undermine };

inline const char* to_string(AttackKind k) {
  switch (k) {
    case AttackKind::Undercut: return "undercut";
    case AttackKind::Rebut: return "rebut";
    case AttackKind::Undermine: return "undermine";
  }
  return "";
}

// One attack record per locus: the attacker contradicts the locus (a premise,
// the conclusion of a defeasible inference, or the applicability of a
// defeasible rule), and thereby attacks every argument the locus occurs in.
struct Attack {
  int attacker = 0;
  int target = 0;
  int locus = 0;
  AttackKind kind = AttackKind::Rebut;
};

inline std::vector<Attack> compute_attacks(const ArgumentStore& store,
                                           const ArgumentationTheory& theory) {
  const size_t n = store.size();
  std::vector<std::vector<int>> supers(n);
  for (const auto& arg : store.all())
    for (int s : arg.sub_closure) supers[static_cast<size_t>(s)].push_back(arg.index);

  std::vector<Attack> out;
  auto record = [&](int attacker, int locus, AttackKind kind) {
    for (int target : supers[static_cast<size_t>(locus)])
      out.push_back({attacker, target, locus, kind});
  };

  for (const auto& attacker : store.all()) {
    if (attacker.conclusion.is_naming()) {
      const NamingAtom& na = attacker.conclusion.naming();
      if (na.positive) continue;
      for (const auto& locus : store.all())
        if (!locus.is_premise && locus.top_rule == na.rule)
          record(attacker.index, locus.index, AttackKind::Undercut);
      continue;
    }
    auto comp = complement(attacker.conclusion);
    if (!comp) continue;
    const std::vector<int>* loci = store.with_conclusion(*comp);
    if (!loci) continue;
    for (int locus : *loci) {
      const Argument& l = store[locus];
      if (l.is_premise) {
        record(attacker.index, locus, AttackKind::Undermine);
      } else {
        const Rule* rule = theory.find_rule(l.top_rule);
        if (rule && !rule->strict) record(attacker.index, locus, AttackKind::Rebut);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Attack& a, const Attack& b) {
    if (a.attacker != b.attacker) return a.attacker < b.attacker;
    if (a.target != b.target) return a.target < b.target;
    if (a.locus != b.locus) return a.locus < b.locus;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

}  // namespace argonto
