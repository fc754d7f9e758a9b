#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "argonto/engine.hpp"
#include "argonto/preferences.hpp"

namespace argonto {

enum class Semantics { Complete, Grounded, Preferred };

inline const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::Complete: return "complete";
    case Semantics::Grounded: return "grounded";
    case Semantics::Preferred: return "preferred";
  }
  return "";
}

struct SemanticsLimits {
  size_t node_budget = 2'000'000;  // labelling search nodes
};

// The least fixpoint: accept arguments whose defeaters are all rejected,
// reject arguments with an accepted defeater, repeat.
inline std::vector<int> grounded_extension(const DefeatGraph& g) {
  enum : char { Unknown, In, Out };
  std::vector<char> label(static_cast<size_t>(g.n), Unknown);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < g.n; ++a) {
      if (label[static_cast<size_t>(a)] != Unknown) continue;
      bool all_out = true;
      for (int d : g.defeaters_of[static_cast<size_t>(a)])
        if (label[static_cast<size_t>(d)] != Out) {
          all_out = false;
          break;
        }
      if (all_out) {
        label[static_cast<size_t>(a)] = In;
        changed = true;
        for (const auto& [x, y] : g.defeats)
          if (x == a && label[static_cast<size_t>(y)] == Unknown) {
            label[static_cast<size_t>(y)] = Out;
          }
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < g.n; ++a)
    if (label[static_cast<size_t>(a)] == In) out.push_back(a);
  return out;
}

namespace detail {

// Three-valued labelling search for the complete labellings. Propagation
// keeps the state locally consistent; leaves are verified in full before
// being reported.
class LabellingSearch {
 public:
  LabellingSearch(const DefeatGraph& g, size_t node_budget)
      : g_(g), budget_(node_budget) {
    targets_of_.resize(static_cast<size_t>(g.n));
    for (const auto& [a, b] : g.defeats) targets_of_[static_cast<size_t>(a)].push_back(b);
  }

  std::vector<std::vector<int>> run() {
    std::vector<Label> state(static_cast<size_t>(g_.n), Label::Open);
    search(state);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  enum class Label : char { Open, In, Out, Undec };

  const DefeatGraph& g_;
  size_t budget_;
  size_t nodes_ = 0;
  std::vector<std::vector<int>> targets_of_;
  std::vector<std::vector<int>> found_;

  bool propagate(std::vector<Label>& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < g_.n; ++a) {
        Label la = s[static_cast<size_t>(a)];
        const auto& defs = g_.defeaters_of[static_cast<size_t>(a)];
        int in = 0, out = 0, open = 0;
        for (int d : defs) {
          switch (s[static_cast<size_t>(d)]) {
            case Label::In: ++in; break;
            case Label::Out: ++out; break;
            case Label::Open: ++open; break;
            case Label::Undec: break;
          }
        }
        int undec = static_cast<int>(defs.size()) - in - out - open;
        switch (la) {
          case Label::Open:
            if (in > 0) {
              s[static_cast<size_t>(a)] = Label::Out;
              changed = true;
            } else if (out == static_cast<int>(defs.size())) {
              s[static_cast<size_t>(a)] = Label::In;
              changed = true;
            }
            break;
          case Label::In:
            // Every defeater must be out.
            if (in > 0 || undec > 0) return false;
            if (open > 0) {
              for (int d : defs)
                if (s[static_cast<size_t>(d)] == Label::Open) {
                  s[static_cast<size_t>(d)] = Label::Out;
                  changed = true;
                }
            }
            break;
          case Label::Out:
            // Needs an accepted defeater; the last open slot must provide it.
            if (in == 0) {
              if (open == 0 && undec == 0) return false;
              if (open == 1 && undec == 0) {
                for (int d : defs)
                  if (s[static_cast<size_t>(d)] == Label::Open) {
                    s[static_cast<size_t>(d)] = Label::In;
                    changed = true;
                  }
              }
            }
            break;
          case Label::Undec:
            // No accepted defeater, but not all rejected either.
            if (in > 0) return false;
            if (out == static_cast<int>(defs.size())) return false;
            if (open == 1 && undec == 0) {
              for (int d : defs)
                if (s[static_cast<size_t>(d)] == Label::Open) {
                  s[static_cast<size_t>(d)] = Label::Undec;
                  changed = true;
                }
            }
            break;
        }
      }
    }
    return true;
  }

  bool verify(const std::vector<Label>& s) const {
    for (int a = 0; a < g_.n; ++a) {
      const auto& defs = g_.defeaters_of[static_cast<size_t>(a)];
      bool any_in = false, all_out = true;
      for (int d : defs) {
        if (s[static_cast<size_t>(d)] == Label::In) any_in = true;
        if (s[static_cast<size_t>(d)] != Label::Out) all_out = false;
      }
      switch (s[static_cast<size_t>(a)]) {
        case Label::In:
          if (!all_out) return false;
          break;
        case Label::Out:
          if (!any_in) return false;
          break;
        case Label::Undec:
          if (any_in || all_out) return false;
          break;
        case Label::Open:
          return false;
      }
    }
    return true;
  }

  void search(std::vector<Label> s) {
    if (++nodes_ > budget_)
      throw BudgetError("extension enumeration budget exceeded");
    if (!propagate(s)) return;
    int pick = -1;
    for (int a = 0; a < g_.n; ++a)
      if (s[static_cast<size_t>(a)] == Label::Open) {
        pick = a;
        break;
      }
    if (pick < 0) {
      if (verify(s)) {
        std::vector<int> ext;
        for (int a = 0; a < g_.n; ++a)
          if (s[static_cast<size_t>(a)] == Label::In) ext.push_back(a);
        found_.push_back(std::move(ext));
      }
      return;
    }
    for (Label l : {Label::In, Label::Out, Label::Undec}) {
      std::vector<Label> branch = s;
      branch[static_cast<size_t>(pick)] = l;
      search(std::move(branch));
    }
  }
};

}  // namespace detail

// Enumerate extensions under the requested semantics, each sorted, the list
// in lexicographic order.
inline std::vector<std::vector<int>> enumerate_extensions(const DefeatGraph& g, Semantics s,
                                                          const SemanticsLimits& limits = {}) {
  if (s == Semantics::Grounded) return {grounded_extension(g)};
  auto complete = detail::LabellingSearch(g, limits.node_budget).run();
  if (s == Semantics::Complete) return complete;
  // Preferred: the maximal complete extensions under set inclusion.
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < complete.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < complete.size() && maximal; ++j) {
      if (i == j) continue;
      if (complete[i].size() < complete[j].size() &&
          std::includes(complete[j].begin(), complete[j].end(), complete[i].begin(),
                        complete[i].end()))
        maximal = false;
    }
    if (maximal) out.push_back(complete[i]);
  }
  return out;
}

struct Justification {
  bool sceptical = false;
  bool credulous = false;
};

inline std::vector<Justification> justify(int n, const std::vector<std::vector<int>>& exts) {
  std::vector<Justification> out(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    bool all = !exts.empty(), any = false;
    for (const auto& e : exts) {
      bool member = std::binary_search(e.begin(), e.end(), a);
      all = all && member;
      any = any || member;
    }
    out[static_cast<size_t>(a)] = {all, any};
  }
  return out;
}

}  // namespace argonto
