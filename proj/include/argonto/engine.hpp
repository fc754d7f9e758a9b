#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argonto/formula.hpp"
#include "argonto/theory.hpp"

namespace argonto {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineLimits {
  size_t max_arguments = 100000;
  int max_skolem_depth = 1;
};

// An argument: either a premise lifted from the knowledge base, or the
// application of a rule to previously built sub-arguments matching its body,
// in body order. Indices refer to the owning store.
struct Argument {
  int index = 0;
  std::string id;  // A1, A2, ... in construction order
  bool is_premise = false;
  Formula conclusion;
  std::string top_rule;   // empty for premises
  std::vector<int> subs;  // direct sub-arguments
  int round = 0;

  // Aggregates over the full sub-argument tree.
  std::vector<int> sub_closure;        // sorted, includes the argument itself
  std::set<std::string> premises;      // rendered knowledge-base formulas
  std::set<std::string> def_rules;     // every defeasible rule used
  std::set<std::string> all_rules;     // every rule used
  std::set<std::string> last_norms;    // defeasible rules applied last
  std::set<std::string> last_principles;
};

struct IndividualInfo {
  std::string name;
  int depth = 0;            // 0 for named individuals
  std::string origin_rule;  // rule whose firing introduced it, if any
};

namespace detail {
class ArgumentBuilder;
}

class ArgumentStore {
 public:
  size_t size() const { return args_.size(); }
  const Argument& operator[](int i) const { return args_[static_cast<size_t>(i)]; }
  const std::vector<Argument>& all() const { return args_; }

  const std::vector<int>* with_conclusion(const Formula& f) const {
    auto it = conclusions_.find(to_string(f));
    return it == conclusions_.end() ? nullptr : &it->second.second;
  }

  // Distinct conclusions in rendered order, each with the arguments sharing it.
  const std::map<std::string, std::pair<Formula, std::vector<int>>>& conclusions() const {
    return conclusions_;
  }

  const std::map<std::string, IndividualInfo>& individuals() const { return individuals_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  int rounds() const { return rounds_; }

 private:
  friend class detail::ArgumentBuilder;
  std::vector<Argument> args_;
  std::map<std::string, int> structure_;  // structural key -> index
  std::map<std::string, std::pair<Formula, std::vector<int>>> conclusions_;
  std::map<std::string, IndividualInfo> individuals_;
  std::map<std::string, std::map<std::string, std::string>> skolem_memo_;
  size_t skolem_counter_ = 0;
  std::vector<std::string> diagnostics_;
  int rounds_ = 0;
};

namespace detail {

class ArgumentBuilder {
 public:
  ArgumentBuilder(const ArgumentationTheory& theory, const EngineLimits& limits)
      : th_(theory), limits_(limits) {}

  ArgumentStore run() {
    for (const auto& f : th_.premises) add_premise(f);
    bool grew = true;
    while (grew) {
      grew = close_round();
      if (grew) ++store_.rounds_;
    }
    return std::move(store_);
  }

 private:
  const ArgumentationTheory& th_;
  const EngineLimits& limits_;
  ArgumentStore store_;
  std::set<std::string> depth_warned_;

  static std::string structural_key(const std::string& rule, const std::vector<int>& subs,
                                    const Formula& conclusion) {
    std::string key = rule.empty() ? "K" : rule;
    key += '|';
    for (int s : subs) {
      key += std::to_string(s);
      key += ',';
    }
    key += '|';
    key += to_string(conclusion);
    return key;
  }

  void register_individuals(const Formula& f, int depth, const std::string& origin) {
    auto reg = [&](const Literal& l) {
      for (const auto& t : l.args)
        if (t.kind == TermKind::Const)
          store_.individuals_.emplace(t.name, IndividualInfo{t.name, depth, origin});
    };
    if (f.is_literal()) reg(f.literal());
    if (f.is_disjunction()) {
      reg(f.disjunction().left);
      reg(f.disjunction().right);
    }
  }

  int individual_depth(const std::string& name) const {
    auto it = store_.individuals_.find(name);
    return it == store_.individuals_.end() ? 0 : it->second.depth;
  }

  void index_argument(const Argument& a, const std::string& key) {
    store_.structure_.emplace(key, a.index);
    auto& entry = store_.conclusions_[to_string(a.conclusion)];
    entry.first = a.conclusion;
    entry.second.push_back(a.index);
  }

  void add_premise(const Formula& f) {
    std::string key = structural_key("", {}, f);
    if (store_.structure_.count(key)) return;
    Argument a;
    a.index = static_cast<int>(store_.args_.size());
    a.id = "A" + std::to_string(a.index + 1);
    a.is_premise = true;
    a.conclusion = f;
    a.sub_closure = {a.index};
    a.premises = {to_string(f)};
    register_individuals(f, 0, "");
    store_.args_.push_back(a);
    index_argument(store_.args_.back(), key);
  }

  struct Candidate {
    const Rule* rule;
    std::vector<int> subs;
    Formula conclusion;
    std::string key;
  };

  // All ways of matching the rule body against stored conclusions, in stored
  // index order per position.
  std::vector<std::pair<Subst, std::vector<int>>> join(const Rule& rule) {
    std::vector<std::pair<Subst, std::vector<int>>> partials{{Subst{}, {}}};
    for (const auto& b : rule.body) {
      if (!b.is_literal()) return {};
      std::vector<std::pair<Subst, std::vector<int>>> next;
      for (const auto& [subst, subs] : partials) {
        for (const auto& arg : store_.args_) {
          auto extended = match(b.literal(), arg.conclusion, subst);
          if (!extended) continue;
          auto grown = subs;
          grown.push_back(arg.index);
          next.emplace_back(std::move(*extended), std::move(grown));
          if (next.size() > limits_.max_arguments)
            throw BudgetError("argument budget exceeded while matching rule '" + rule.id +
                              "'");
        }
      }
      partials = std::move(next);
      if (partials.empty()) break;
    }
    return partials;
  }

  // Ground the head under the substitution. Leftover plain variables (from
  // transposed rules) are instantiated by unifying the head against the
  // complements of stored conclusions; zero matches means the rule simply
  // does not fire. Leftover fresh markers name new individuals, one per
  // firing, up to the skolem depth limit.
  std::vector<Formula> ground_heads(const Rule& rule, const Subst& subst) {
    Formula head = substitute(rule.head, subst);
    std::set<std::string> vars, fresh;
    collect_variables(head, vars, fresh);
    if (!vars.empty() && !fresh.empty()) {
      if (depth_warned_.insert(rule.id).second)
        store_.diagnostics_.push_back("rule '" + rule.id +
                                      "': head mixes open variables with fresh markers; "
                                      "not fired");
      return {};
    }
    if (!vars.empty()) {
      if (!head.is_literal()) return {};
      std::vector<Formula> out;
      std::set<std::string> seen;
      for (const auto& [text, entry] : store_.conclusions_) {
        (void)text;
        auto comp = complement(entry.first);
        if (!comp) continue;
        auto full = match(head.literal(), *comp, Subst{});
        if (!full) continue;
        Formula grounded = substitute(head, *full);
        if (seen.insert(to_string(grounded)).second) out.push_back(std::move(grounded));
      }
      return out;
    }
    if (!fresh.empty()) {
      int depth = 1;
      for (const auto& [var, term] : subst) {
        (void)var;
        if (term.kind == TermKind::Const)
          depth = std::max(depth, individual_depth(term.name) + 1);
      }
      if (depth > limits_.max_skolem_depth) {
        if (depth_warned_.insert(rule.id).second)
          store_.diagnostics_.push_back("rule '" + rule.id +
                                        "': skolem depth limit reached; some instances "
                                        "not fired");
        return {};
      }
      std::string memo_key = rule.id + "|";
      for (const auto& [var, term] : subst) memo_key += var + "=" + to_string(term) + ",";
      auto& names = store_.skolem_memo_[memo_key];
      Subst fresh_subst;
      for (const auto& fv : fresh) {
        auto it = names.find(fv);
        if (it == names.end()) {
          std::string name = "_sk" + std::to_string(++store_.skolem_counter_);
          store_.individuals_.emplace(name, IndividualInfo{name, depth, rule.id});
          it = names.emplace(fv, std::move(name)).first;
        }
        fresh_subst.emplace(fv, Term::constant(it->second));
      }
      // Fresh markers substitute like variables once renamed.
      Formula grounded = head;
      auto deref = [&](Literal l) {
        for (auto& t : l.args)
          if (t.kind == TermKind::Fresh) t = fresh_subst.at(t.name);
        return l;
      };
      if (grounded.is_literal()) {
        grounded = Formula{deref(grounded.literal())};
      } else if (grounded.is_disjunction()) {
        grounded = Formula{Disjunction{deref(grounded.disjunction().left),
                                       deref(grounded.disjunction().right)}};
      }
      return {grounded};
    }
    return {head};
  }

  bool close_round() {
    std::vector<Candidate> fresh_candidates;
    std::set<std::string> round_keys;
    for (const auto& rule : th_.rules) {
      for (auto& [subst, subs] : join(rule)) {
        for (auto& conclusion : ground_heads(rule, subst)) {
          std::string key = structural_key(rule.id, subs, conclusion);
          if (store_.structure_.count(key) || !round_keys.insert(key).second) continue;
          fresh_candidates.push_back({&rule, subs, std::move(conclusion), std::move(key)});
        }
      }
    }
    if (fresh_candidates.empty()) return false;
    if (store_.args_.size() + fresh_candidates.size() > limits_.max_arguments)
      throw BudgetError("argument budget exceeded (" +
                        std::to_string(store_.args_.size() + fresh_candidates.size()) +
                        " arguments, limit " + std::to_string(limits_.max_arguments) + ")");
    std::sort(fresh_candidates.begin(), fresh_candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.rule->id != b.rule->id) return a.rule->id < b.rule->id;
                if (a.subs != b.subs) return a.subs < b.subs;
                return to_string(a.conclusion) < to_string(b.conclusion);
              });
    for (auto& c : fresh_candidates) add_inference(c);
    return true;
  }

  void add_inference(Candidate& c) {
    Argument a;
    a.index = static_cast<int>(store_.args_.size());
    a.id = "A" + std::to_string(a.index + 1);
    a.conclusion = std::move(c.conclusion);
    a.top_rule = c.rule->id;
    a.subs = std::move(c.subs);
    a.round = store_.rounds_ + 1;

    std::set<int> closure{a.index};
    for (int s : a.subs) {
      const Argument& sub = store_.args_[static_cast<size_t>(s)];
      closure.insert(sub.sub_closure.begin(), sub.sub_closure.end());
      a.premises.insert(sub.premises.begin(), sub.premises.end());
      a.def_rules.insert(sub.def_rules.begin(), sub.def_rules.end());
      a.all_rules.insert(sub.all_rules.begin(), sub.all_rules.end());
    }
    a.sub_closure.assign(closure.begin(), closure.end());
    a.all_rules.insert(c.rule->id);
    if (!c.rule->strict) {
      a.def_rules.insert(c.rule->id);
      a.last_norms = {c.rule->id};
    } else {
      for (int s : a.subs) {
        const Argument& sub = store_.args_[static_cast<size_t>(s)];
        a.last_norms.insert(sub.last_norms.begin(), sub.last_norms.end());
      }
    }
    for (const auto& n : a.last_norms) a.last_principles.insert(th_.principle_of(n));
    register_individuals(a.conclusion, 0, "");  // constants from rule heads
    store_.args_.push_back(std::move(a));
    index_argument(store_.args_.back(), c.key);
  }
};

}  // namespace detail

// Build every argument the theory supports, to fixpoint. Deterministic: ids
// follow construction order, and each round adds its candidates sorted by
// rule id, sub-arguments, and conclusion.
inline ArgumentStore construct_arguments(const ArgumentationTheory& theory,
                                         const EngineLimits& limits = {}) {
  return detail::ArgumentBuilder(theory, limits).run();
}

// Conclusions derivable from `base` using the strict rules alone, including
// `base` itself.
inline std::set<std::string> strict_closure(const std::vector<Formula>& base,
                                            const ArgumentationTheory& theory,
                                            const EngineLimits& limits = {}) {
  ArgumentationTheory strict_only;
  std::set<std::string> seen;
  for (const auto& f : base)
    if (seen.insert(to_string(f)).second) strict_only.premises.push_back(f);
  for (const auto& r : theory.rules)
    if (r.strict) strict_only.rules.push_back(r);
  ArgumentStore store = detail::ArgumentBuilder(strict_only, limits).run();
  std::set<std::string> out;
  for (const auto& [text, entry] : store.conclusions()) {
    (void)entry;
    out.insert(text);
  }
  return out;
}

}  // namespace argonto
