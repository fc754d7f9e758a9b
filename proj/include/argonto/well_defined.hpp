#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "argonto/engine.hpp"
#include "argonto/theory.hpp"
#include "argonto/translation.hpp"

namespace argonto {

// A rendered literal's contrary, or nothing for disjunctions.
namespace detail {
inline std::optional<std::string> negate_rendered(const std::string& s) {
  if (s.find(" OR ") != std::string::npos) return std::nullopt;
  if (!s.empty() && s[0] == '~') return s.substr(1);
  return "~" + s;
}
}  // namespace detail

struct PremiseWitness {
  std::string argument;
  std::string formula;  // derivable together with its contrary
};

struct TranspositionWitness {
  std::string rule;
  size_t body_position;  // 1-based
};

struct ClassicalityWitness {
  std::vector<std::string> subset;   // minimal inconsistent premises
  std::string removed;               // the premise taken out
  std::string expected;              // contrary that the rest fails to derive
};

struct WellDefinedReport {
  bool premises_consistent = true;
  std::vector<PremiseWitness> premise_witnesses;
  bool transposition_closed = true;
  std::vector<TranspositionWitness> transposition_witnesses;
  bool classical = true;
  std::vector<ClassicalityWitness> classicality_witnesses;
  std::vector<std::string> notes;

  bool pass() const { return premises_consistent && transposition_closed && classical; }
};

// The three structural requirements on a theory: no argument's premises
// support contrary conclusions under the strict rules; every strict rule
// carries all its contrapositions; and removing one member of a minimal
// inconsistent premise set lets the rest derive that member's contrary.
inline WellDefinedReport check_well_defined(const ArgumentationTheory& th,
                                            const EngineLimits& limits = {}) {
  WellDefinedReport report;

  std::map<std::string, Formula> premise_by_text;
  for (const auto& f : th.premises) premise_by_text.emplace(to_string(f), f);

  auto inconsistent_pair = [](const std::set<std::string>& closure)
      -> std::optional<std::string> {
    for (const auto& s : closure) {
      if (!s.empty() && s[0] == '~') continue;  // count each pair once
      auto neg = detail::negate_rendered(s);
      if (neg && closure.count(*neg)) return s;
    }
    return std::nullopt;
  };

  ArgumentStore store = construct_arguments(th, limits);
  for (const auto& arg : store.all()) {
    std::vector<Formula> prem;
    for (const auto& p : arg.premises) prem.push_back(premise_by_text.at(p));
    auto closure = strict_closure(prem, th, limits);
    if (auto bad = inconsistent_pair(closure)) {
      report.premises_consistent = false;
      report.premise_witnesses.push_back({arg.id, *bad});
    }
  }

  // Contraposition coverage, up to variable renaming and body order.
  std::set<std::string> strict_keys;
  for (const auto& r : th.rules)
    if (r.strict) strict_keys.insert(rule_structure_key(r));
  for (const auto& r : th.rules) {
    if (!r.strict) continue;
    if (!r.head.is_literal()) {
      report.notes.push_back("rule '" + r.id +
                             "' has a non-literal head; contrapositions not required");
      continue;
    }
    for (size_t pos = 0; pos < r.body.size(); ++pos) {
      if (!r.body[pos].is_literal()) continue;
      Rule t;
      t.strict = true;
      for (size_t j = 0; j < r.body.size(); ++j)
        if (j != pos) t.body.push_back(r.body[j]);
      Literal moved = r.head.literal().negated();
      for (auto& term : moved.args)
        if (term.kind == TermKind::Fresh) term.kind = TermKind::Variable;
      t.body.push_back(Formula{moved});
      t.head = *complement(r.body[pos]);
      if (!strict_keys.count(rule_structure_key(t))) {
        report.transposition_closed = false;
        report.transposition_witnesses.push_back({r.id, pos + 1});
      }
    }
  }

  // Classicality over the minimal inconsistent premise subsets. Subset
  // enumeration is exponential, so very large knowledge bases are skipped
  // with a note rather than guessed at.
  const size_t n = th.premises.size();
  if (n > 16) {
    report.notes.push_back("classicality not checked: " + std::to_string(n) +
                           " premises is past the subset enumeration cutoff (16)");
    return report;
  }
  std::vector<uint32_t> inconsistent_masks;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool has_inconsistent_subset = false;
    for (uint32_t seen : inconsistent_masks)
      if ((seen & mask) == seen) {
        has_inconsistent_subset = true;
        break;
      }
    if (has_inconsistent_subset) continue;  // not minimal
    std::vector<Formula> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(th.premises[i]);
    auto closure = strict_closure(subset, th, limits);
    if (!inconsistent_pair(closure)) continue;
    inconsistent_masks.push_back(mask);
    for (size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      std::vector<Formula> rest;
      for (size_t j = 0; j < n; ++j)
        if (j != i && (mask & (1u << j))) rest.push_back(th.premises[j]);
      auto expected = detail::negate_rendered(to_string(th.premises[i]));
      if (!expected) continue;  // disjunctive premises cannot occur
      auto rest_closure = strict_closure(rest, th, limits);
      if (!rest_closure.count(*expected)) {
        report.classical = false;
        ClassicalityWitness w;
        for (const auto& f : subset) w.subset.push_back(to_string(f));
        w.removed = to_string(th.premises[i]);
        w.expected = *expected;
        report.classicality_witnesses.push_back(std::move(w));
      }
    }
  }
  return report;
}

}  // namespace argonto
