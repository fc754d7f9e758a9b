#pragma once

#include <string>

#include "argonto/ontology.hpp"

namespace argonto {

namespace detail {

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string mode_text(bool strict, const std::string& principle) {
  return strict ? "strict" : "defeasible(" + principle + ")";
}

inline std::string rule_text(const char* kw, const RuleDecl& r) {
  std::string s = std::string(kw) + " " + r.id + " " + mode_text(r.strict, r.principle) + ": ";
  for (size_t i = 0; i < r.body.size(); ++i) {
    if (i) s += ", ";
    s += to_string(r.body[i]);
  }
  s += r.strict ? " -> " : " => ";
  if (r.head.is_naming()) {
    s += "~applicable(" + r.head.naming().rule + ")";
  } else {
    s += to_string(r.head);
  }
  return s;
}

}  // namespace detail

// Emit an ontology in the same statement language the parser reads. Output is
// grouped by statement kind and keeps declaration order within each group, so
// parse(serialize(o)) == o structurally.
inline std::string serialize_ontology(const Ontology& o) {
  std::string out = "# argonto ontology\n";
  for (const auto& p : o.principles)
    out += "PRINCIPLE " + p.id + " " + detail::quote(p.text) + "\n";
  for (const auto& d : o.priorities)
    out += "PRIORITY " + d.lo + (d.equal ? " = " : " < ") + d.hi + "\n";
  for (const auto& a : o.tbox) {
    out += "TBOX " + a.id + " " + detail::mode_text(a.strict, a.principle) + ": " +
           to_string(a.lhs) + (a.equivalence ? " EQUIV " : " SUBSUMED_BY ") + to_string(a.rhs) +
           "\n";
  }
  for (const auto& r : o.rules) out += detail::rule_text("RULE", r) + "\n";
  for (const auto& u : o.undercuts) out += detail::rule_text("UNDERCUT", u) + "\n";
  for (const auto& a : o.abox) out += "ABOX " + to_string(a.literal) + "\n";
  return out;
}

}  // namespace argonto
