#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "argonto/attacks.hpp"
#include "argonto/engine.hpp"
#include "argonto/preferences.hpp"
#include "argonto/theory.hpp"
#include "argonto/well_defined.hpp"

namespace argonto {

using ordered_json = nlohmann::ordered_json;

inline ordered_json theory_json(const ArgumentationTheory& th) {
  ordered_json j;
  j["premises"] = ordered_json::array();
  for (const auto& f : th.premises) j["premises"].push_back(to_string(f));
  j["rules"] = ordered_json::array();
  for (const auto& r : th.rules) {
    ordered_json rule;
    rule["id"] = r.id;
    rule["mode"] = r.strict ? "strict" : "defeasible";
    if (!r.strict) rule["principle"] = r.principle;
    rule["body"] = ordered_json::array();
    for (const auto& b : r.body) rule["body"].push_back(to_string(b));
    rule["head"] = to_string(r.head);
    if (!r.source.empty()) rule["source"] = r.source;
    j["rules"].push_back(std::move(rule));
  }
  j["principles"] = ordered_json::array();
  for (const auto& p : th.principles) {
    ordered_json pr;
    pr["id"] = p.id;
    pr["text"] = p.text;
    j["principles"].push_back(std::move(pr));
  }
  j["priorities"] = ordered_json::array();
  for (const auto& d : th.priorities.declared()) {
    ordered_json pr;
    pr["lower"] = d.lo;
    pr["relation"] = d.equal ? "=" : "<";
    pr["higher"] = d.hi;
    j["priorities"].push_back(std::move(pr));
  }
  j["diagnostics"] = th.diagnostics;
  return j;
}

inline ordered_json argument_json(const Argument& a) {
  ordered_json j;
  j["id"] = a.id;
  j["conclusion"] = to_string(a.conclusion);
  if (!a.is_premise) {
    j["topRule"] = a.top_rule;
    j["subs"] = ordered_json::array();
    for (int s : a.subs) j["subs"].push_back("A" + std::to_string(s + 1));
  }
  j["premises"] = std::vector<std::string>(a.premises.begin(), a.premises.end());
  j["defRules"] = std::vector<std::string>(a.def_rules.begin(), a.def_rules.end());
  j["lastNorms"] = std::vector<std::string>(a.last_norms.begin(), a.last_norms.end());
  j["lastPrinciples"] =
      std::vector<std::string>(a.last_principles.begin(), a.last_principles.end());
  return j;
}

inline ordered_json arguments_json(const ArgumentStore& store) {
  ordered_json j;
  j["arguments"] = ordered_json::array();
  for (const auto& a : store.all()) j["arguments"].push_back(argument_json(a));
  j["individuals"] = ordered_json::array();
  for (const auto& [name, info] : store.individuals()) {
    ordered_json ind;
    ind["name"] = name;
    ind["depth"] = info.depth;
    if (!info.origin_rule.empty()) ind["originRule"] = info.origin_rule;
    j["individuals"].push_back(std::move(ind));
  }
  j["rounds"] = store.rounds();
  j["diagnostics"] = store.diagnostics();
  return j;
}

inline ordered_json af_json(const ArgumentStore& store, const std::vector<Attack>& attacks,
                            const DefeatGraph& graph) {
  ordered_json j;
  j["arguments"] = ordered_json::array();
  for (const auto& a : store.all()) j["arguments"].push_back(a.id);
  j["attacks"] = ordered_json::array();
  for (const auto& at : attacks) {
    ordered_json a;
    a["attacker"] = store[at.attacker].id;
    a["target"] = store[at.target].id;
    a["locus"] = store[at.locus].id;
    a["kind"] = to_string(at.kind);
    j["attacks"].push_back(std::move(a));
  }
  j["defeats"] = ordered_json::array();
  for (const auto& [a, b] : graph.defeats)
    j["defeats"].push_back(ordered_json::array({store[a].id, store[b].id}));
  return j;
}

// The defeat graph in the common arg(.)/att(.,.) text exchange format.
inline std::string af_apx(const ArgumentStore& store, const DefeatGraph& graph) {
  std::string out;
  for (const auto& a : store.all()) out += "arg(" + a.id + ").\n";
  for (const auto& [a, b] : graph.defeats)
    out += "att(" + store[a].id + "," + store[b].id + ").\n";
  return out;
}

inline ordered_json well_defined_json(const WellDefinedReport& r) {
  ordered_json j;
  j["pass"] = r.pass();
  j["premisesConsistent"] = r.premises_consistent;
  j["premiseWitnesses"] = ordered_json::array();
  for (const auto& w : r.premise_witnesses) {
    ordered_json x;
    x["argument"] = w.argument;
    x["formula"] = w.formula;
    j["premiseWitnesses"].push_back(std::move(x));
  }
  j["transpositionClosed"] = r.transposition_closed;
  j["transpositionWitnesses"] = ordered_json::array();
  for (const auto& w : r.transposition_witnesses) {
    ordered_json x;
    x["rule"] = w.rule;
    x["bodyPosition"] = w.body_position;
    j["transpositionWitnesses"].push_back(std::move(x));
  }
  j["classical"] = r.classical;
  j["classicalityWitnesses"] = ordered_json::array();
  for (const auto& w : r.classicality_witnesses) {
    ordered_json x;
    x["subset"] = w.subset;
    x["removed"] = w.removed;
    x["expected"] = w.expected;
    j["classicalityWitnesses"].push_back(std::move(x));
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace argonto
