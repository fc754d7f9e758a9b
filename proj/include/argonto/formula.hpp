#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace argonto {

// Terms are variables, fresh-variable markers (skolem slots in rule heads),
// or constants naming individuals.

enum class TermKind { Variable, Fresh, Const };

struct Term {
  TermKind kind = TermKind::Const;
  std::string name;

  static Term variable(std::string n) { return {TermKind::Variable, std::move(n)}; }
  static Term fresh(std::string n) { return {TermKind::Fresh, std::move(n)}; }
  static Term constant(std::string n) { return {TermKind::Const, std::move(n)}; }

  bool is_ground() const { return kind == TermKind::Const; }

  auto operator<=>(const Term&) const = default;
};

inline std::string to_string(const Term& t) {
  if (t.kind == TermKind::Fresh) return "?" + t.name;
  return t.name;
}

// A (possibly negated) predicate applied to one or two terms.
struct Literal {
  std::string pred;
  std::vector<Term> args;
  bool positive = true;

  Literal negated() const {
    Literal l = *this;
    l.positive = !l.positive;
    return l;
  }

  bool is_ground() const {
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }

  auto operator<=>(const Literal&) const = default;
};

inline std::string to_string(const Literal& l) {
  std::string s = l.positive ? "" : "~";
  s += l.pred;
  s += '(';
  for (size_t i = 0; i < l.args.size(); ++i) {
    if (i) s += ',';
    s += to_string(l.args[i]);
  }
  s += ')';
  return s;
}

// Binary disjunction of literals; produced when a subsumption has a union on
// the right-hand side. Disjunctions take part in inference but have no
// complement, so they are never rebutted or undermined.
struct Disjunction {
  Literal left;
  Literal right;

  bool is_ground() const { return left.is_ground() && right.is_ground(); }

  auto operator<=>(const Disjunction&) const = default;
};

inline std::string to_string(const Disjunction& d) {
  return to_string(d.left) + " OR " + to_string(d.right);
}

// applicable(r) / ~applicable(r): the statement that defeasible rule r is
// applicable. Negative naming atoms are the conclusions of undercutting rules.
struct NamingAtom {
  std::string rule;
  bool positive = true;

  auto operator<=>(const NamingAtom&) const = default;
};

inline std::string to_string(const NamingAtom& n) {
  return (n.positive ? std::string() : std::string("~")) + "applicable(" + n.rule + ")";
}

struct Formula {
  std::variant<Literal, Disjunction, NamingAtom> node;

  Formula() = default;
  Formula(Literal l) : node(std::move(l)) {}
  Formula(Disjunction d) : node(std::move(d)) {}
  Formula(NamingAtom n) : node(std::move(n)) {}

  bool is_literal() const { return std::holds_alternative<Literal>(node); }
  bool is_disjunction() const { return std::holds_alternative<Disjunction>(node); }
  bool is_naming() const { return std::holds_alternative<NamingAtom>(node); }

  const Literal& literal() const { return std::get<Literal>(node); }
  const Disjunction& disjunction() const { return std::get<Disjunction>(node); }
  const NamingAtom& naming() const { return std::get<NamingAtom>(node); }

  bool is_ground() const {
    if (is_literal()) return literal().is_ground();
    if (is_disjunction()) return disjunction().is_ground();
    return true;
  }

  auto operator<=>(const Formula&) const = default;
};

inline std::string to_string(const Formula& f) {
  if (f.is_literal()) return to_string(f.literal());
  if (f.is_disjunction()) return to_string(f.disjunction());
  return to_string(f.naming());
}

// The contrary of a formula, when one exists. Literals and naming atoms flip
// their sign; disjunctions have none.
inline std::optional<Formula> complement(const Formula& f) {
  if (f.is_literal()) return Formula{f.literal().negated()};
  if (f.is_naming()) {
    NamingAtom n = f.naming();
    n.positive = !n.positive;
    return Formula{n};
  }
  return std::nullopt;
}

// Substitutions map variable names to terms (constants, once grounding is
// done). Fresh markers are never substituted through; they are replaced
// explicitly by the argument constructor.
using Subst = std::map<std::string, Term>;

inline Term substitute(const Term& t, const Subst& s) {
  if (t.kind == TermKind::Variable) {
    auto it = s.find(t.name);
    if (it != s.end()) return it->second;
  }
  return t;
}

inline Literal substitute(const Literal& l, const Subst& s) {
  Literal out = l;
  for (auto& a : out.args) a = substitute(a, s);
  return out;
}

inline Formula substitute(const Formula& f, const Subst& s) {
  if (f.is_literal()) return Formula{substitute(f.literal(), s)};
  if (f.is_disjunction())
    return Formula{Disjunction{substitute(f.disjunction().left, s), substitute(f.disjunction().right, s)}};
  return f;
}

// Match a body literal against a ground formula, extending `seed`. Constants
// must agree, variables bind consistently, fresh markers never match.
inline std::optional<Subst> match(const Literal& pattern, const Formula& ground, Subst seed) {
  if (!ground.is_literal()) return std::nullopt;
  const Literal& g = ground.literal();
  if (pattern.pred != g.pred || pattern.positive != g.positive ||
      pattern.args.size() != g.args.size())
    return std::nullopt;
  for (size_t i = 0; i < pattern.args.size(); ++i) {
    const Term& p = pattern.args[i];
    const Term& t = g.args[i];
    switch (p.kind) {
      case TermKind::Const:
        if (p.name != t.name) return std::nullopt;
        break;
      case TermKind::Variable: {
        auto it = seed.find(p.name);
        if (it == seed.end())
          seed.emplace(p.name, t);
        else if (it->second != t)
          return std::nullopt;
        break;
      }
      case TermKind::Fresh:
        return std::nullopt;
    }
  }
  return seed;
}

inline void collect_variables(const Term& t, std::set<std::string>& vars,
                              std::set<std::string>& fresh) {
  if (t.kind == TermKind::Variable) vars.insert(t.name);
  if (t.kind == TermKind::Fresh) fresh.insert(t.name);
}

inline void collect_variables(const Literal& l, std::set<std::string>& vars,
                              std::set<std::string>& fresh) {
  for (const auto& a : l.args) collect_variables(a, vars, fresh);
}

inline void collect_variables(const Formula& f, std::set<std::string>& vars,
                              std::set<std::string>& fresh) {
  if (f.is_literal()) collect_variables(f.literal(), vars, fresh);
  if (f.is_disjunction()) {
    collect_variables(f.disjunction().left, vars, fresh);
    collect_variables(f.disjunction().right, vars, fresh);
  }
}

}  // namespace argonto
