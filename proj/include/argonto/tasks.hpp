#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argonto/attacks.hpp"
#include "argonto/engine.hpp"
#include "argonto/ontology.hpp"
#include "argonto/preferences.hpp"
#include "argonto/semantics.hpp"
#include "argonto/translation.hpp"

namespace argonto {

enum class Mode { Sceptical, Credulous };

inline const char* to_string(Mode m) {
  return m == Mode::Sceptical ? "sceptical" : "credulous";
}

struct TaskError : std::runtime_error {
  enum class Code { Unknown, NotAccepted, BadQuery };
  Code code;
  TaskError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct PipelineOptions {
  TranslationOptions translation;
  EngineLimits engine;
  SemanticsLimits semantics;
};

// Everything the reasoning tasks share: the assembled theory, the argument
// store, attacks, the defeat graph, and extension sets per semantics
// (computed on first use).
class Pipeline {
 public:
  Pipeline(Ontology ontology, const PipelineOptions& options = {})
      : ontology_(std::move(ontology)),
        options_(options),
        theory_(translate_ontology(ontology_, options.translation)),
        store_(construct_arguments(theory_, options.engine)),
        attacks_(compute_attacks(store_, theory_)),
        graph_(compute_defeats(store_, attacks_, theory_.priorities)) {}

  const Ontology& ontology() const { return ontology_; }
  const ArgumentationTheory& theory() const { return theory_; }
  const ArgumentStore& store() const { return store_; }
  const std::vector<Attack>& attacks() const { return attacks_; }
  const DefeatGraph& graph() const { return graph_; }

  const std::vector<std::vector<int>>& extensions(Semantics s) const {
    auto it = extensions_.find(s);
    if (it == extensions_.end())
      it = extensions_.emplace(s, enumerate_extensions(graph_, s, options_.semantics)).first;
    return it->second;
  }

  // Which arguments are justified under the mode: members of every extension
  // (sceptical) or of at least one (credulous).
  std::vector<bool> justified(Mode m, Semantics s) const {
    const auto& exts = extensions(s);
    auto flags = justify(graph_.n, exts);
    std::vector<bool> out(static_cast<size_t>(graph_.n));
    for (int i = 0; i < graph_.n; ++i)
      out[static_cast<size_t>(i)] =
          m == Mode::Sceptical ? flags[static_cast<size_t>(i)].sceptical
                               : flags[static_cast<size_t>(i)].credulous;
    return out;
  }

  std::vector<std::string> diagnostics() const {
    std::vector<std::string> out = theory_.diagnostics;
    out.insert(out.end(), store_.diagnostics().begin(), store_.diagnostics().end());
    return out;
  }

 private:
  Ontology ontology_;
  PipelineOptions options_;
  ArgumentationTheory theory_;
  ArgumentStore store_;
  std::vector<Attack> attacks_;
  DefeatGraph graph_;
  mutable std::map<Semantics, std::vector<std::vector<int>>> extensions_;
};

// ---------------------------------------------------------------------------
// Consistency

struct ConsistencyResult {
  bool consistent = true;
  std::vector<std::pair<std::string, std::string>> witnesses;  // attacker, target ids
};

// The knowledge is consistent exactly when no argument attacks another.
inline ConsistencyResult check_consistency(const Pipeline& p, size_t max_witnesses = 10) {
  ConsistencyResult r;
  std::set<std::pair<int, int>> pairs;
  for (const auto& at : p.attacks()) pairs.emplace(at.attacker, at.target);
  r.consistent = pairs.empty();
  for (const auto& [a, b] : pairs) {
    if (r.witnesses.size() >= max_witnesses) break;
    r.witnesses.emplace_back(p.store()[a].id, p.store()[b].id);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Assertion acceptance

struct AcceptanceResult {
  bool accepted = false;
  std::vector<std::string> witnesses;  // justified arguments concluding the assertion
  std::vector<std::string> notes;
};

inline AcceptanceResult accept_assertion(const Pipeline& p, const Literal& assertion,
                                         Mode mode, Semantics sem) {
  AcceptanceResult r;
  const auto& arity = p.ontology().predicate_arity;
  auto it = arity.find(assertion.pred);
  if (it == arity.end()) {
    r.notes.push_back("unknown predicate '" + assertion.pred + "'");
    return r;
  }
  if (it->second != static_cast<int>(assertion.args.size())) {
    r.notes.push_back("predicate '" + assertion.pred + "' takes " +
                      std::to_string(it->second) + " argument(s)");
    return r;
  }
  const auto* concluders = p.store().with_conclusion(Formula{assertion});
  if (!concluders) return r;
  auto just = p.justified(mode, sem);
  for (int idx : *concluders)
    if (just[static_cast<size_t>(idx)]) r.witnesses.push_back(p.store()[idx].id);
  r.accepted = !r.witnesses.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Instance checking

struct InstanceResult {
  bool holds = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

namespace detail {

// Justified arguments concluding the exact formula.
inline std::vector<int> justified_concluders(const Pipeline& p, const Formula& f,
                                             const std::vector<bool>& just) {
  std::vector<int> out;
  if (const auto* all = p.store().with_conclusion(f))
    for (int idx : *all)
      if (just[static_cast<size_t>(idx)]) out.push_back(idx);
  return out;
}

inline bool in_extension(const std::vector<int>& ext, int idx) {
  return std::binary_search(ext.begin(), ext.end(), idx);
}

inline Literal unary(const std::string& cls_name, const std::string& ind, bool positive) {
  return Literal{cls_name, {Term::constant(ind)}, positive};
}

}  // namespace detail

// Membership of an individual in a class expression, reduced to acceptance
// of the component assertions. With `same_extension`, credulous compound
// queries must find all their witnesses inside one extension instead of
// cherry-picking across extensions.
inline InstanceResult check_instance(const Pipeline& p, const std::string& individual,
                                     const ConceptExpr& cls, Mode mode, Semantics sem,
                                     bool same_extension = false) {
  using Kind = ConceptExpr::Kind;
  InstanceResult r;
  auto just = p.justified(mode, sem);
  auto note_witnesses = [&](const std::vector<int>& idxs) {
    for (int i : idxs) r.witnesses.push_back(p.store()[i].id);
  };

  switch (cls.kind) {
    case Kind::Atomic:
    case Kind::Negated: {
      Formula f{detail::unary(cls.name, individual, cls.kind == Kind::Atomic)};
      auto w = detail::justified_concluders(p, f, just);
      r.holds = !w.empty();
      note_witnesses(w);
      return r;
    }
    case Kind::And: {
      std::vector<const ConceptExpr*> members;
      flatten_conjunction(cls, members);
      std::vector<std::vector<int>> per_member;
      for (const auto* m : members) {
        if (m->kind != Kind::Atomic && m->kind != Kind::Negated)
          throw TaskError(TaskError::Code::BadQuery,
                          "conjunctions in instance queries take atomic operands");
        Formula f{detail::unary(m->name, individual, m->kind == Kind::Atomic)};
        per_member.push_back(detail::justified_concluders(p, f, just));
        if (per_member.back().empty()) return r;
      }
      if (same_extension && mode == Mode::Credulous) {
        for (const auto& ext : p.extensions(sem)) {
          bool all_here = true;
          for (const auto& w : per_member) {
            bool here = false;
            for (int idx : w) here = here || detail::in_extension(ext, idx);
            all_here = all_here && here;
          }
          if (all_here) {
            r.holds = true;
            for (const auto& w : per_member) note_witnesses(w);
            return r;
          }
        }
        return r;
      }
      r.holds = true;
      for (const auto& w : per_member) note_witnesses(w);
      return r;
    }
    case Kind::Or: {
      for (const auto* side : {cls.lhs.get(), cls.rhs.get()}) {
        if (side->kind != Kind::Atomic)
          throw TaskError(TaskError::Code::BadQuery,
                          "unions in instance queries take atomic operands");
        Formula f{detail::unary(side->name, individual, true)};
        auto w = detail::justified_concluders(p, f, just);
        if (!w.empty()) {
          r.holds = true;
          note_witnesses(w);
          return r;
        }
      }
      return r;
    }
    case Kind::Exists:
    case Kind::Forall: {
      if (cls.filler().kind != Kind::Atomic)
        throw TaskError(TaskError::Code::BadQuery, "restriction fillers must be atomic");
      // Successors come from justified role conclusions only.
      std::map<std::string, std::vector<int>> successors;  // successor -> role args
      for (const auto& [text, entry] : p.store().conclusions()) {
        (void)text;
        if (!entry.first.is_literal()) continue;
        const Literal& l = entry.first.literal();
        if (!l.positive || l.pred != cls.role || l.args.size() != 2 ||
            l.args[0].name != individual)
          continue;
        for (int idx : entry.second)
          if (just[static_cast<size_t>(idx)]) successors[l.args[1].name].push_back(idx);
      }
      std::erase_if(successors, [](const auto& kv) { return kv.second.empty(); });

      if (cls.kind == Kind::Exists) {
        for (const auto& [succ, role_args] : successors) {
          Formula f{detail::unary(cls.filler().name, succ, true)};
          auto w = detail::justified_concluders(p, f, just);
          if (w.empty()) continue;
          if (same_extension && mode == Mode::Credulous) {
            bool together = false;
            for (const auto& ext : p.extensions(sem)) {
              bool role_here = false, filler_here = false;
              for (int idx : role_args) role_here = role_here || detail::in_extension(ext, idx);
              for (int idx : w) filler_here = filler_here || detail::in_extension(ext, idx);
              if (role_here && filler_here) {
                together = true;
                break;
              }
            }
            if (!together) continue;
          }
          r.holds = true;
          note_witnesses(role_args);
          note_witnesses(w);
          return r;
        }
        return r;
      }

      // FORALL: vacuously false without a derivable successor; otherwise all
      // justified successors must fall under the filler.
      if (successors.empty()) {
        r.notes.push_back("no justified '" + cls.role + "' successor of '" + individual +
                          "'");
        return r;
      }
      for (const auto& [succ, role_args] : successors) {
        Formula f{detail::unary(cls.filler().name, succ, true)};
        auto w = detail::justified_concluders(p, f, just);
        if (w.empty()) return r;
        note_witnesses(role_args);
        note_witnesses(w);
      }
      r.holds = true;
      return r;
    }
    default:
      throw TaskError(TaskError::Code::BadQuery, "unsupported class expression");
  }
}

// ---------------------------------------------------------------------------
// Collective acceptance

// The conclusion sets of the extensions, rendered and sorted.
inline std::vector<std::vector<std::string>> extension_conclusions(const Pipeline& p,
                                                                   Semantics sem) {
  std::vector<std::vector<std::string>> out;
  for (const auto& ext : p.extensions(sem)) {
    std::set<std::string> conclusions;
    for (int idx : ext) conclusions.insert(to_string(p.store()[idx].conclusion));
    out.emplace_back(conclusions.begin(), conclusions.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instance / concept retrieval

inline std::vector<std::string> instances_of(const Pipeline& p, const ConceptExpr& cls,
                                             Mode mode, Semantics sem,
                                             bool same_extension = false) {
  std::vector<std::string> out;
  for (const auto& [name, info] : p.store().individuals()) {
    (void)info;
    if (check_instance(p, name, cls, mode, sem, same_extension).holds) out.push_back(name);
  }
  return out;
}

inline std::vector<std::string> concepts_of(const Pipeline& p, const std::string& individual,
                                            Mode mode, Semantics sem) {
  auto just = p.justified(mode, sem);
  std::set<std::string> out;
  for (const auto& [text, entry] : p.store().conclusions()) {
    (void)text;
    if (!entry.first.is_literal()) continue;
    const Literal& l = entry.first.literal();
    if (!l.positive || l.args.size() != 1 || l.args[0].name != individual) continue;
    for (int idx : entry.second)
      if (just[static_cast<size_t>(idx)]) {
        out.insert(l.pred);
        break;
      }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Explanation

// How an assertion is supported and why its defeaters fail: the premises and
// rules of a justified concluding argument, plus the same data for every
// extension member that defeats one of its defeaters. The ordering lists the
// priority declarations in force.
struct Explanation {
  struct Support {
    std::string argument;
    std::vector<std::string> premises;
    std::vector<std::string> rules;  // all rules used
    std::vector<std::string> norms;  // defeasible subset
  };
  Support how;
  std::vector<Support> why;
  std::vector<std::string> ordering;
};

namespace detail {

inline Explanation::Support support_of(const Pipeline& p, int idx) {
  const Argument& a = p.store()[idx];
  Explanation::Support s;
  s.argument = a.id;
  s.premises.assign(a.premises.begin(), a.premises.end());
  s.rules.assign(a.all_rules.begin(), a.all_rules.end());
  s.norms.assign(a.def_rules.begin(), a.def_rules.end());
  return s;
}

}  // namespace detail

inline std::vector<Explanation> explain_assertion(const Pipeline& p, const Literal& assertion,
                                                  Mode mode, Semantics sem) {
  Formula f{assertion};
  const auto* concluders = p.store().with_conclusion(f);
  if (!concluders || concluders->empty())
    throw TaskError(TaskError::Code::Unknown,
                    "no argument concludes " + to_string(f));
  auto just = p.justified(mode, sem);
  std::vector<int> accepted;
  for (int idx : *concluders)
    if (just[static_cast<size_t>(idx)]) accepted.push_back(idx);
  if (accepted.empty())
    throw TaskError(TaskError::Code::NotAccepted,
                    to_string(f) + " is not " + to_string(mode) + "ly accepted under " +
                        to_string(sem) + " semantics");

  std::vector<std::string> ordering;
  for (const auto& d : p.theory().priorities.declared())
    ordering.push_back(d.lo + (d.equal ? " = " : " < ") + d.hi);

  std::vector<Explanation> out;
  for (int idx : accepted) {
    Explanation e;
    e.how = detail::support_of(p, idx);
    e.ordering = ordering;

    // Defenders are drawn from the first extension containing the argument.
    const std::vector<int>* home = nullptr;
    for (const auto& ext : p.extensions(sem))
      if (detail::in_extension(ext, idx)) {
        home = &ext;
        break;
      }
    if (home) {
      std::set<int> defenders;
      for (int defeater : p.graph().defeaters_of[static_cast<size_t>(idx)])
        for (int member : *home)
          if (p.graph().defeat(member, defeater)) defenders.insert(member);
      for (int d : defenders) e.why.push_back(detail::support_of(p, d));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace argonto
