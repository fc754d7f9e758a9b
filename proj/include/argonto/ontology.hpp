#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "argonto/formula.hpp"

namespace argonto {

// Class expressions in the restricted description-logic dialect: atomic
// concepts, negated atomics, conjunctions, binary unions of atomics,
// qualified existential/universal restrictions, and the empty concept.
struct ConceptExpr {
  enum class Kind { Atomic, Negated, And, Or, Exists, Forall, Nothing };

  Kind kind = Kind::Atomic;
  std::string name;  // Atomic / Negated: the concept name
  std::string role;  // Exists / Forall
  std::shared_ptr<const ConceptExpr> lhs;  // And / Or operands,
  std::shared_ptr<const ConceptExpr> rhs;  // Exists / Forall filler in lhs

  static ConceptExpr atomic(std::string n) {
    ConceptExpr e;
    e.name = std::move(n);
    return e;
  }
  static ConceptExpr negated(std::string n) {
    ConceptExpr e;
    e.kind = Kind::Negated;
    e.name = std::move(n);
    return e;
  }
  static ConceptExpr nothing() {
    ConceptExpr e;
    e.kind = Kind::Nothing;
    return e;
  }
  static ConceptExpr conj(ConceptExpr a, ConceptExpr b) {
    ConceptExpr e;
    e.kind = Kind::And;
    e.lhs = std::make_shared<const ConceptExpr>(std::move(a));
    e.rhs = std::make_shared<const ConceptExpr>(std::move(b));
    return e;
  }
  static ConceptExpr disj(ConceptExpr a, ConceptExpr b) {
    ConceptExpr e;
    e.kind = Kind::Or;
    e.lhs = std::make_shared<const ConceptExpr>(std::move(a));
    e.rhs = std::make_shared<const ConceptExpr>(std::move(b));
    return e;
  }
  static ConceptExpr restriction(Kind k, std::string role, ConceptExpr filler) {
    ConceptExpr e;
    e.kind = k;
    e.role = std::move(role);
    e.lhs = std::make_shared<const ConceptExpr>(std::move(filler));
    return e;
  }

  const ConceptExpr& filler() const { return *lhs; }

  bool operator==(const ConceptExpr& o) const {
    if (kind != o.kind || name != o.name || role != o.role) return false;
    if (static_cast<bool>(lhs) != static_cast<bool>(o.lhs)) return false;
    if (static_cast<bool>(rhs) != static_cast<bool>(o.rhs)) return false;
    if (lhs && !(*lhs == *o.lhs)) return false;
    if (rhs && !(*rhs == *o.rhs)) return false;
    return true;
  }
};

// Flatten nested And nodes into their conjunct list, left to right.
inline void flatten_conjunction(const ConceptExpr& e, std::vector<const ConceptExpr*>& out) {
  if (e.kind == ConceptExpr::Kind::And) {
    flatten_conjunction(*e.lhs, out);
    flatten_conjunction(*e.rhs, out);
  } else {
    out.push_back(&e);
  }
}

inline std::string to_string(const ConceptExpr& e) {
  using Kind = ConceptExpr::Kind;
  auto wrap = [](const ConceptExpr& child) {
    std::string s = to_string(child);
    if (child.kind == Kind::And || child.kind == Kind::Or) return "(" + s + ")";
    return s;
  };
  switch (e.kind) {
    case Kind::Atomic: return e.name;
    case Kind::Negated: return "NOT " + e.name;
    case Kind::Nothing: return "NOTHING";
    case Kind::Exists: return "EXISTS " + e.role + "." + wrap(e.filler());
    case Kind::Forall: return "FORALL " + e.role + "." + wrap(e.filler());
    case Kind::And: return wrap(*e.lhs) + " AND " + wrap(*e.rhs);
    case Kind::Or: return wrap(*e.lhs) + " OR " + wrap(*e.rhs);
  }
  return "";
}

struct PrincipleDecl {
  std::string id;
  std::string text;
  int line = 0;

  bool operator==(const PrincipleDecl& o) const { return id == o.id && text == o.text; }
};

// A single declared comparison: lo < hi, or lo = hi when `equal` is set.
struct PriorityDecl {
  std::string lo;
  std::string hi;
  bool equal = false;
  int line = 0;

  bool operator==(const PriorityDecl& o) const {
    return lo == o.lo && hi == o.hi && equal == o.equal;
  }
};

// Reflexive-transitive closure of the declared comparisons over the declared
// principles. Cycles are allowed (the relation is a preorder); they are
// surfaced as diagnostics, not errors.
class PriorityOrder {
 public:
  static PriorityOrder build(const std::vector<PrincipleDecl>& principles,
                             const std::vector<PriorityDecl>& decls) {
    PriorityOrder p;
    for (const auto& pr : principles) {
      p.index_.emplace(pr.id, static_cast<int>(p.ids_.size()));
      p.ids_.push_back(pr.id);
    }
    const size_t n = p.ids_.size();
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) p.leq_[i][i] = 1;
    for (const auto& d : decls) {
      int lo = p.index_.at(d.lo);
      int hi = p.index_.at(d.hi);
      p.leq_[lo][hi] = 1;
      if (d.equal) p.leq_[hi][lo] = 1;
    }
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i)
        if (p.leq_[i][k])
          for (size_t j = 0; j < n; ++j)
            if (p.leq_[k][j]) p.leq_[i][j] = 1;
    p.declared_ = decls;
    return p;
  }

  bool has(const std::string& id) const { return index_.count(id) != 0; }

  // a <= b: principle a is at most as important as b.
  bool leq(const std::string& a, const std::string& b) const {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) return a == b;
    return leq_[ia->second][ib->second] != 0;
  }

  bool less(const std::string& a, const std::string& b) const {
    return leq(a, b) && !leq(b, a);
  }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<PriorityDecl>& declared() const { return declared_; }

  // Distinct principles made mutually comparable by `<` chains alone. Pairs
  // joined by an explicit `=` declaration are intentional and not reported.
  std::vector<std::pair<std::string, std::string>> cycle_pairs() const {
    std::set<std::pair<std::string, std::string>> equal_decls;
    for (const auto& d : declared_)
      if (d.equal) {
        equal_decls.insert({d.lo, d.hi});
        equal_decls.insert({d.hi, d.lo});
      }
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < ids_.size(); ++i)
      for (size_t j = i + 1; j < ids_.size(); ++j)
        if (leq_[i][j] && leq_[j][i] && !equal_decls.count({ids_[i], ids_[j]}))
          out.emplace_back(ids_[i], ids_[j]);
    return out;
  }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<char>> leq_;
  std::vector<PriorityDecl> declared_;
};

struct TBoxAxiom {
  std::string id;
  bool strict = true;
  std::string principle;  // set iff defeasible
  bool equivalence = false;
  bool role_axiom = false;  // both sides are role names (kept in lhs/rhs .name)
  ConceptExpr lhs;
  ConceptExpr rhs;
  int line = 0;

  bool is_disjointness() const {
    return !role_axiom && rhs.kind == ConceptExpr::Kind::Nothing;
  }

  bool operator==(const TBoxAxiom& o) const {
    return id == o.id && strict == o.strict && principle == o.principle &&
           equivalence == o.equivalence && role_axiom == o.role_axiom && lhs == o.lhs &&
           rhs == o.rhs;
  }
};

struct ABoxAssertion {
  Literal literal;  // ground, over named individuals
  int line = 0;

  bool operator==(const ABoxAssertion& o) const { return literal == o.literal; }
};

// A hand-written inference rule. Undercutting rules reuse this shape with a
// negative naming atom as head.
struct RuleDecl {
  std::string id;
  bool strict = true;
  std::string principle;
  std::vector<Literal> body;
  Formula head;
  int line = 0;

  bool operator==(const RuleDecl& o) const {
    return id == o.id && strict == o.strict && principle == o.principle && body == o.body &&
           head == o.head;
  }
};

struct Ontology {
  std::vector<PrincipleDecl> principles;
  std::vector<PriorityDecl> priorities;
  std::vector<TBoxAxiom> tbox;
  std::vector<ABoxAssertion> abox;
  std::vector<RuleDecl> rules;
  std::vector<RuleDecl> undercuts;

  // Filled in by validation.
  PriorityOrder priority_order;
  std::map<std::string, int> predicate_arity;
  std::vector<std::string> diagnostics;

  bool operator==(const Ontology& o) const {
    return principles == o.principles && priorities == o.priorities && tbox == o.tbox &&
           abox == o.abox && rules == o.rules && undercuts == o.undercuts;
  }
};

}  // namespace argonto
