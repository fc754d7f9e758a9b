#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argonto/ontology.hpp"
#include "argonto/theory.hpp"

namespace argonto {

struct TranslationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TranslationOptions {
  bool auto_transpose = true;
  // A subsumption into FORALL p.D also emits a companion rule concluding a
  // fresh p-successor, mirroring the mapping table line for line. Turning
  // this off keeps only the value-propagation rule.
  bool table_verbatim = true;
};

namespace detail {

struct RuleDraft {
  std::vector<Formula> body;
  Formula head;
};

// Body atoms for a left-hand side conjunction over main variable x. Each
// existential member adds a role atom with its own successor variable.
inline std::vector<Formula> lhs_body(const ConceptExpr& lhs, int& aux_counter, int line,
                                     const std::string& axiom_id) {
  std::vector<const ConceptExpr*> members;
  flatten_conjunction(lhs, members);
  std::vector<Formula> body;
  Term x = Term::variable("x");
  for (const auto* m : members) {
    switch (m->kind) {
      case ConceptExpr::Kind::Atomic:
        body.push_back(Literal{m->name, {x}, true});
        break;
      case ConceptExpr::Kind::Exists: {
        std::string y = aux_counter == 0 ? "y" : "y" + std::to_string(aux_counter + 1);
        ++aux_counter;
        body.push_back(Literal{m->role, {x, Term::variable(y)}, true});
        body.push_back(Literal{m->filler().name, {Term::variable(y)}, true});
        break;
      }
      default:
        throw TranslationError("axiom '" + axiom_id + "' (line " + std::to_string(line) +
                               "): untranslatable left-hand side");
    }
  }
  return body;
}

inline std::vector<RuleDraft> translate_direction(const TBoxAxiom& a, const ConceptExpr& lhs,
                                                  const ConceptExpr& rhs,
                                                  const TranslationOptions& opt) {
  using Kind = ConceptExpr::Kind;
  Term x = Term::variable("x");
  std::vector<RuleDraft> out;

  if (rhs.kind == Kind::Nothing) {
    // Pairwise-style disjointness: each concept is denied from the others.
    std::vector<const ConceptExpr*> members;
    flatten_conjunction(lhs, members);
    for (size_t i = members.size(); i-- > 0;) {
      RuleDraft d;
      for (size_t j = 0; j < members.size(); ++j)
        if (j != i) d.body.push_back(Literal{members[j]->name, {x}, true});
      d.head = Formula{Literal{members[i]->name, {x}, false}};
      out.push_back(std::move(d));
    }
    return out;
  }

  int aux = 0;
  std::vector<Formula> body = lhs_body(lhs, aux, a.line, a.id);

  switch (rhs.kind) {
    case Kind::Atomic:
      out.push_back({body, Formula{Literal{rhs.name, {x}, true}}});
      break;
    case Kind::And: {
      std::vector<const ConceptExpr*> members;
      flatten_conjunction(rhs, members);
      for (const auto* m : members)
        out.push_back({body, Formula{Literal{m->name, {x}, true}}});
      break;
    }
    case Kind::Or: {
      Literal left{rhs.lhs->name, {x}, true};
      Literal right{rhs.rhs->name, {x}, true};
      out.push_back({body, Formula{Disjunction{left, right}}});
      auto with = [&](const Literal& extra) {
        std::vector<Formula> b = body;
        b.push_back(extra);
        return b;
      };
      out.push_back({with(left.negated()), Formula{right}});
      out.push_back({with(right.negated()), Formula{left}});
      break;
    }
    case Kind::Exists: {
      Term v = Term::fresh("v");
      std::vector<Formula> head_body = body;
      out.push_back({body, Formula{Literal{rhs.role, {x, v}, true}}});
      Term y = Term::variable(aux == 0 ? "y" : "y" + std::to_string(aux + 1));
      head_body.push_back(Literal{rhs.role, {x, y}, true});
      out.push_back({head_body, Formula{Literal{rhs.filler().name, {y}, true}}});
      break;
    }
    case Kind::Forall: {
      Term y = Term::variable(aux == 0 ? "y" : "y" + std::to_string(aux + 1));
      std::vector<Formula> prop_body = body;
      prop_body.push_back(Literal{rhs.role, {x, y}, true});
      out.push_back({prop_body, Formula{Literal{rhs.filler().name, {y}, true}}});
      if (opt.table_verbatim)
        out.push_back({body, Formula{Literal{rhs.role, {x, Term::fresh("v")}, true}}});
      break;
    }
    default:
      throw TranslationError("axiom '" + a.id + "' (line " + std::to_string(a.line) +
                             "): untranslatable right-hand side");
  }
  return out;
}

inline std::string primed(const std::string& base, int primes) {
  return base + std::string(static_cast<size_t>(primes), '\'');
}

}  // namespace detail

// Map one axiom to rules. Ids are the axiom id followed by primed variants
// in emission order; mode and principle carry over to every rule.
inline std::vector<Rule> translate_axiom(const TBoxAxiom& a,
                                         const TranslationOptions& opt = {}) {
  std::vector<detail::RuleDraft> drafts;
  if (a.role_axiom) {
    Term x = Term::variable("x");
    Term y = Term::variable("y");
    Literal l{a.lhs.name, {x, y}, true};
    Literal r{a.rhs.name, {x, y}, true};
    drafts.push_back({{Formula{l}}, Formula{r}});
    if (a.equivalence) drafts.push_back({{Formula{r}}, Formula{l}});
  } else {
    drafts = detail::translate_direction(a, a.lhs, a.rhs, opt);
    if (a.equivalence) {
      auto back = detail::translate_direction(a, a.rhs, a.lhs, opt);
      drafts.insert(drafts.end(), back.begin(), back.end());
    }
  }
  std::vector<Rule> rules;
  std::set<std::string> seen;
  int primes = 0;
  for (auto& d : drafts) {
    Rule r;
    r.strict = a.strict;
    r.principle = a.principle;
    r.body = std::move(d.body);
    r.head = std::move(d.head);
    r.source = a.id;
    if (!seen.insert(rule_structure_key(r)).second) continue;  // e.g. C EQUIV C
    r.id = detail::primed(a.id, primes++);
    rules.push_back(std::move(r));
  }
  return rules;
}

// Contrapositions of strict rules, closed under repetition: for each body
// atom, a rule concluding its complement from the remaining atoms plus the
// complement of the head. Fresh markers in a moved head become plain
// variables. Returns the input rules followed by the generated ones; rules
// with disjunctive heads are left alone and reported.
inline std::vector<Rule> transpose_strict(std::vector<Rule> rules,
                                          std::set<std::string> reserved_ids = {},
                                          std::vector<std::string>* diagnostics = nullptr) {
  std::set<std::string> keys;
  for (const auto& r : rules) {
    keys.insert(rule_structure_key(r));
    reserved_ids.insert(r.id);
  }
  auto defresh = [](const Formula& f) {
    if (!f.is_literal()) return f;
    Literal l = f.literal();
    for (auto& t : l.args)
      if (t.kind == TermKind::Fresh) t.kind = TermKind::Variable;
    return Formula{l};
  };
  for (size_t i = 0; i < rules.size(); ++i) {
    if (!rules[i].strict) continue;
    if (!rules[i].head.is_literal()) {
      if (diagnostics)
        diagnostics->push_back("rule '" + rules[i].id +
                               "' has a non-literal head; transposition skipped");
      continue;
    }
    for (size_t pos = 0; pos < rules[i].body.size(); ++pos) {
      const Rule src = rules[i];  // rules may reallocate below
      if (!src.body[pos].is_literal()) continue;
      Rule t;
      t.strict = true;
      t.source = src.id;
      for (size_t j = 0; j < src.body.size(); ++j)
        if (j != pos) t.body.push_back(src.body[j]);
      t.body.push_back(defresh(*complement(src.head)));
      t.head = *complement(src.body[pos]);
      if (!keys.insert(rule_structure_key(t)).second) continue;
      int primes = 1;
      while (reserved_ids.count(detail::primed(src.id, primes))) ++primes;
      t.id = detail::primed(src.id, primes);
      reserved_ids.insert(t.id);
      rules.push_back(std::move(t));
    }
  }
  return rules;
}

// Assemble the argumentation theory for an ontology: premises from the ABox,
// rules from the axioms followed by hand-written rules and undercuts, then
// the transposition closure of the strict part unless disabled.
inline ArgumentationTheory translate_ontology(const Ontology& o,
                                              const TranslationOptions& opt = {}) {
  ArgumentationTheory th;
  th.diagnostics = o.diagnostics;

  std::set<Formula> seen_premises;
  for (const auto& a : o.abox) {
    Formula f{a.literal};
    if (!seen_premises.insert(f).second) {
      th.diagnostics.push_back("duplicate assertion " + to_string(f) + " ignored");
      continue;
    }
    th.premises.push_back(std::move(f));
  }

  std::map<std::string, std::string> id_source;  // rule id -> axiom id, for collisions
  std::map<std::string, std::string> key_owner;  // structure key + principle -> rule id
  auto add_rule = [&](Rule r, const std::string& origin) {
    auto at = id_source.find(r.id);
    if (at != id_source.end())
      throw TranslationError("rule id '" + r.id + "' from " + origin +
                             " collides with a rule from " + at->second);
    std::string key = rule_structure_key(r) + "|" + r.principle;
    auto [it, fresh] = key_owner.emplace(key, r.id);
    if (!fresh) {
      th.diagnostics.push_back("rule '" + r.id + "' duplicates '" + it->second +
                               "'; dropped");
      return;
    }
    id_source.emplace(r.id, origin);
    th.rules.push_back(std::move(r));
  };

  auto mentions_forall = [](const ConceptExpr& e) {
    return e.kind == ConceptExpr::Kind::Forall;
  };
  for (const auto& a : o.tbox) {
    for (auto& r : translate_axiom(a, opt)) add_rule(std::move(r), "axiom '" + a.id + "'");
    if (opt.table_verbatim && !a.role_axiom &&
        (mentions_forall(a.rhs) || (a.equivalence && mentions_forall(a.lhs))))
      th.diagnostics.push_back("axiom '" + a.id +
                               "': universal restriction also emits a rule concluding a "
                               "fresh successor (disable with the value-only option)");
  }
  auto convert_decl = [](const RuleDecl& d) {
    Rule r;
    r.id = d.id;
    r.strict = d.strict;
    r.principle = d.principle;
    for (const auto& l : d.body) r.body.push_back(Formula{l});
    r.head = d.head;
    return r;
  };
  for (const auto& d : o.rules) add_rule(convert_decl(d), "rule '" + d.id + "'");
  for (const auto& u : o.undercuts) add_rule(convert_decl(u), "rule '" + u.id + "'");

  for (const auto& u : o.undercuts) {
    const std::string& target = u.head.naming().rule;
    bool found = false;
    for (const auto& r : th.rules)
      if (r.id == target) {
        if (r.strict)
          throw TranslationError("undercut '" + u.id + "' targets strict rule '" + target +
                                 "'");
        found = true;
        break;
      }
    if (!found)
      throw TranslationError("undercut '" + u.id + "' targets unknown rule '" + target + "'");
  }

  if (opt.auto_transpose)
    th.rules = transpose_strict(std::move(th.rules), {}, &th.diagnostics);

  for (const auto& p : o.principles) th.principles.push_back({p.id, p.text});
  th.priorities = o.priority_order;
  return th;
}

}  // namespace argonto
