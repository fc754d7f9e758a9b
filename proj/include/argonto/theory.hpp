#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "argonto/formula.hpp"
#include "argonto/ontology.hpp"

namespace argonto {

// An inference rule of the assembled theory. Strict rules carry no principle;
// defeasible rules (the norms) always do. The naming atom applicable(id)
// stands for the rule in undercut conclusions.
struct Rule {
  std::string id;
  bool strict = true;
  std::string principle;
  std::vector<Formula> body;  // literals only
  Formula head;               // literal, disjunction, or negative naming atom
  std::string source;         // axiom id or source rule id for generated rules, else empty

  NamingAtom naming_atom() const { return NamingAtom{id, true}; }
};

inline std::string to_string(const Rule& r) {
  std::string s = r.id + ": ";
  for (size_t i = 0; i < r.body.size(); ++i) {
    if (i) s += ", ";
    s += to_string(r.body[i]);
  }
  s += r.strict ? " -> " : " => ";
  s += to_string(r.head);
  return s;
}

namespace detail {

inline void structure_key_term(const Term& t, std::map<std::string, int>& rename,
                               std::string& out) {
  if (t.kind == TermKind::Const) {
    out += t.name;
    return;
  }
  auto [it, fresh] = rename.emplace(t.name, static_cast<int>(rename.size()));
  (void)fresh;
  out += t.kind == TermKind::Fresh ? "?v" : "v";
  out += std::to_string(it->second);
}

inline void structure_key_formula(const Formula& f, std::map<std::string, int>& rename,
                                  std::string& out) {
  if (f.is_naming()) {
    out += to_string(f.naming());
    return;
  }
  auto lit = [&](const Literal& l) {
    if (!l.positive) out += '~';
    out += l.pred;
    out += '(';
    for (size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ',';
      structure_key_term(l.args[i], rename, out);
    }
    out += ')';
  };
  if (f.is_literal()) {
    lit(f.literal());
  } else {
    lit(f.disjunction().left);
    out += " OR ";
    lit(f.disjunction().right);
  }
}

}  // namespace detail

// A canonical string identifying a rule up to variable renaming and body
// order: the body permutation minimizing the rendered form, with variables
// numbered by first occurrence. Mode is part of the key, the principle is
// not; callers decide whether a principle mismatch still counts as the same
// rule. Bodies past eight atoms skip the permutation search.
inline std::string rule_structure_key(const Rule& r) {
  std::vector<size_t> idx(r.body.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto render = [&](const std::vector<size_t>& order) {
    std::string out = r.strict ? "S " : "D ";
    std::map<std::string, int> rename;
    for (size_t i : order) {
      detail::structure_key_formula(r.body[i], rename, out);
      out += ' ';
    }
    out += ": ";
    detail::structure_key_formula(r.head, rename, out);
    return out;
  };
  if (idx.size() > 8) return render(idx);
  std::string best = render(idx);
  while (std::next_permutation(idx.begin(), idx.end())) {
    std::string s = render(idx);
    if (s < best) best = s;
  }
  return best;
}

struct Principle {
  std::string id;
  std::string text;
};

// The assembled argumentation theory: premises (the assertional knowledge in
// file order), strict and defeasible rules in a fixed order, principles, and
// the priority preorder over them.
struct ArgumentationTheory {
  std::vector<Formula> premises;
  std::vector<Rule> rules;
  std::vector<Principle> principles;
  PriorityOrder priorities;
  std::vector<std::string> diagnostics;

  const Rule* find_rule(const std::string& id) const {
    for (const auto& r : rules)
      if (r.id == id) return &r;
    return nullptr;
  }

  std::string principle_of(const std::string& rule_id) const {
    const Rule* r = find_rule(rule_id);
    return r ? r->principle : std::string();
  }

  std::vector<const Rule*> strict_rules() const {
    std::vector<const Rule*> out;
    for (const auto& r : rules)
      if (r.strict) out.push_back(&r);
    return out;
  }

  std::vector<const Rule*> norms() const {
    std::vector<const Rule*> out;
    for (const auto& r : rules)
      if (!r.strict) out.push_back(&r);
    return out;
  }
};

}  // namespace argonto
