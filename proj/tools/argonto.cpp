// argonto: compile a legal ontology into an argumentation theory and query it.
//
// One reasoning task per invocation so every output stays golden-testable:
//   check         knowledge-base consistency (exit 1 when inconsistent)
//   accept        acceptance of a single ground assertion
//   instance      membership of an individual in a class expression
//   conclusions   the conclusion sets of the extensions
//   instances-of  all individuals falling under a class expression
//   concepts-of   all atomic concepts an individual falls under
//   explain       support and defense for an accepted assertion (exit 1 when
//                 the assertion is unknown or not accepted)
//   arguments     dump the constructed arguments
//   af            dump attacks and the defeat graph (json, text, or apx)
//   extensions    enumerate extensions under the selected semantics
//   well-defined  structural checks on the compiled theory (exit 1 on failure)
//
// Exit codes: 0 answered, 1 negative check result, 2 usage or input errors,
// 3 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "argonto/argonto.hpp"
#include "argonto/json_io.hpp"

namespace {

using argonto::ordered_json;

constexpr int kExitAnswered = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string input;
  std::string semantics = "gr";
  std::string mode = "sceptical";
  std::string format = "json";
  std::vector<std::string> priorities;  // raw "a<b" / "a=b" overrides
  size_t max_arguments = 100000;
  int max_skolem_depth = 1;
  bool auto_transpose = true;
  bool table_verbatim = true;
  bool norms_only = false;
  bool same_extension = false;
  std::string emit_theory;
  std::string emit_arguments;
  std::string emit_af;
};

argonto::Semantics semantics_of(const std::string& tag) {
  if (tag == "gr") return argonto::Semantics::Grounded;
  if (tag == "co") return argonto::Semantics::Complete;
  return argonto::Semantics::Preferred;
}

argonto::Mode mode_of(const std::string& tag) {
  return tag == "credulous" ? argonto::Mode::Credulous : argonto::Mode::Sceptical;
}

// "p2<p1" or "p1=p2", whitespace tolerated. Both sides must be declared
// principles; overrides replace every PRIORITY line from the file.
argonto::PriorityDecl parse_priority_override(const std::string& text) {
  auto strip = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  size_t pos = text.find_first_of("<=");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--priority", "expected 'a<b' or 'a=b', got '" + text + "'");
  argonto::PriorityDecl d;
  d.lo = strip(text.substr(0, pos));
  d.hi = strip(text.substr(pos + 1));
  d.equal = text[pos] == '=';
  if (d.lo.empty() || d.hi.empty())
    throw CLI::ValidationError("--priority", "expected 'a<b' or 'a=b', got '" + text + "'");
  return d;
}

argonto::Ontology load_ontology(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot open '" + cfg.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  argonto::Ontology onto = argonto::parse_ontology(buf.str());
  if (!cfg.priorities.empty()) {
    std::vector<argonto::PriorityDecl> decls;
    for (const auto& raw : cfg.priorities) {
      auto d = parse_priority_override(raw);
      for (const auto& side : {d.lo, d.hi})
        if (!onto.priority_order.has(side))
          throw CLI::ValidationError("--priority", "undeclared principle '" + side + "'");
      decls.push_back(std::move(d));
    }
    onto.priorities = decls;
    onto.priority_order = argonto::PriorityOrder::build(onto.principles, decls);
  }
  return onto;
}

argonto::PipelineOptions pipeline_options(const RunConfig& cfg) {
  argonto::PipelineOptions opt;
  opt.translation.auto_transpose = cfg.auto_transpose;
  opt.translation.table_verbatim = cfg.table_verbatim;
  opt.engine.max_arguments = cfg.max_arguments;
  opt.engine.max_skolem_depth = cfg.max_skolem_depth;
  return opt;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// Side dumps shared by every subcommand that builds the pipeline.
void emit_dumps(const RunConfig& cfg, const argonto::Pipeline& p) {
  if (!cfg.emit_theory.empty())
    write_file(cfg.emit_theory, argonto::theory_json(p.theory()).dump(2) + "\n");
  if (!cfg.emit_arguments.empty())
    write_file(cfg.emit_arguments, argonto::arguments_json(p.store()).dump(2) + "\n");
  if (!cfg.emit_af.empty())
    write_file(cfg.emit_af,
               argonto::af_json(p.store(), p.attacks(), p.graph()).dump(2) + "\n");
}

ordered_json envelope(const RunConfig& cfg, const std::string& task,
                      const argonto::Pipeline& p) {
  ordered_json j;
  j["task"] = task;
  j["input"] = cfg.input;
  j["semantics"] = cfg.semantics;
  j["mode"] = cfg.mode;
  j["answer"] = nullptr;
  j["witnesses"] = ordered_json::array();
  j["diagnostics"] = p.diagnostics();
  return j;
}

void print_payload(const RunConfig& cfg, const ordered_json& j,
                   const std::string& text_form) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_form;
}

std::string join_lines(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += "  " + x + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int run_check(const RunConfig& cfg) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  auto r = argonto::check_consistency(p);
  ordered_json j = envelope(cfg, "check", p);
  j["answer"] = r.consistent ? "consistent" : "inconsistent";
  for (const auto& [a, b] : r.witnesses)
    j["witnesses"].push_back(ordered_json::array({a, b}));
  std::string text = std::string(r.consistent ? "consistent" : "inconsistent") + "\n";
  for (const auto& [a, b] : r.witnesses) text += "  " + a + " attacks " + b + "\n";
  print_payload(cfg, j, text);
  return r.consistent ? kExitAnswered : kExitNegative;
}

int run_accept(const RunConfig& cfg, const std::string& assertion) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  argonto::Literal lit = argonto::parse_ground_literal(assertion);
  auto r = argonto::accept_assertion(p, lit, mode_of(cfg.mode), semantics_of(cfg.semantics));
  ordered_json j = envelope(cfg, "accept", p);
  j["answer"] = r.accepted;
  j["witnesses"] = r.witnesses;
  for (const auto& n : r.notes) j["diagnostics"].push_back(n);
  std::string text = std::string(r.accepted ? "accepted" : "not accepted") + "\n" +
                     join_lines(r.witnesses) + join_lines(r.notes);
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_instance(const RunConfig& cfg, const std::string& individual,
                 const std::string& cls_text) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  argonto::ConceptExpr cls = argonto::parse_concept_expr(cls_text);
  auto r = argonto::check_instance(p, individual, cls, mode_of(cfg.mode),
                                   semantics_of(cfg.semantics), cfg.same_extension);
  ordered_json j = envelope(cfg, "instance", p);
  j["answer"] = r.holds;
  j["witnesses"] = r.witnesses;
  for (const auto& n : r.notes) j["diagnostics"].push_back(n);
  std::string text = std::string(r.holds ? "yes" : "no") + "\n" + join_lines(r.witnesses) +
                     join_lines(r.notes);
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_conclusions(const RunConfig& cfg) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  auto sets = argonto::extension_conclusions(p, semantics_of(cfg.semantics));
  ordered_json j = envelope(cfg, "conclusions", p);
  j["answer"] = sets;
  std::string text;
  for (size_t i = 0; i < sets.size(); ++i) {
    text += "extension " + std::to_string(i + 1) + ":\n" + join_lines(sets[i]);
  }
  if (sets.empty()) text = "no extensions\n";
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_instances_of(const RunConfig& cfg, const std::string& cls_text) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  argonto::ConceptExpr cls = argonto::parse_concept_expr(cls_text);
  auto names = argonto::instances_of(p, cls, mode_of(cfg.mode), semantics_of(cfg.semantics),
                                     cfg.same_extension);
  ordered_json j = envelope(cfg, "instances-of", p);
  j["answer"] = names;
  print_payload(cfg, j, join_lines(names));
  return kExitAnswered;
}

int run_concepts_of(const RunConfig& cfg, const std::string& individual) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  auto names = argonto::concepts_of(p, individual, mode_of(cfg.mode),
                                    semantics_of(cfg.semantics));
  ordered_json j = envelope(cfg, "concepts-of", p);
  j["answer"] = names;
  print_payload(cfg, j, join_lines(names));
  return kExitAnswered;
}

ordered_json support_json(const argonto::Explanation::Support& s, bool norms_only) {
  ordered_json j;
  j["argument"] = s.argument;
  j["premises"] = s.premises;
  j["rules"] = norms_only ? s.norms : s.rules;
  return j;
}

std::string support_text(const argonto::Explanation::Support& s, bool norms_only) {
  std::string out = "  " + s.argument + "\n";
  out += "    premises:\n" + join_lines(s.premises);
  out += "    rules:\n" + join_lines(norms_only ? s.norms : s.rules);
  return out;
}

int run_explain(const RunConfig& cfg, const std::string& assertion) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  argonto::Literal lit = argonto::parse_ground_literal(assertion);
  std::vector<argonto::Explanation> exps;
  try {
    exps = argonto::explain_assertion(p, lit, mode_of(cfg.mode), semantics_of(cfg.semantics));
  } catch (const argonto::TaskError& e) {
    if (e.code == argonto::TaskError::Code::BadQuery) throw;
    ordered_json j = envelope(cfg, "explain", p);
    j["answer"] = e.code == argonto::TaskError::Code::Unknown ? "unknown" : "not accepted";
    j["diagnostics"].push_back(e.what());
    print_payload(cfg, j, std::string(j["answer"].get<std::string>()) + "\n  " + e.what() +
                              "\n");
    return kExitNegative;
  }
  ordered_json j = envelope(cfg, "explain", p);
  j["answer"] = "accepted";
  j["explanations"] = ordered_json::array();
  std::string text = "accepted\n";
  for (const auto& e : exps) {
    ordered_json x;
    x["how"] = support_json(e.how, cfg.norms_only);
    x["why"] = ordered_json::array();
    // The why-part keeps the full rule sets: a defense often rests on strict
    // consequences of the defender's premises, and hiding those rules would
    // leave the defeat unexplained.
    for (const auto& w : e.why) x["why"].push_back(support_json(w, false));
    x["ordering"] = e.ordering;
    j["explanations"].push_back(std::move(x));
    text += "how:\n" + support_text(e.how, cfg.norms_only);
    text += "why:\n";
    for (const auto& w : e.why) text += support_text(w, false);
    text += "ordering:\n" + join_lines(e.ordering);
  }
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_arguments(const RunConfig& cfg) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  ordered_json j = argonto::arguments_json(p.store());
  std::string text;
  for (const auto& a : p.store().all()) {
    text += a.id + ": " + to_string(a.conclusion);
    if (!a.is_premise) {
      text += "  [" + a.top_rule + ":";
      for (int s : a.subs) text += " " + p.store()[s].id;
      text += "]";
    }
    text += "\n";
  }
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_af(const RunConfig& cfg) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  if (cfg.format == "apx") {
    std::cout << argonto::af_apx(p.store(), p.graph());
    return kExitAnswered;
  }
  ordered_json j = argonto::af_json(p.store(), p.attacks(), p.graph());
  std::string text;
  for (const auto& at : p.attacks())
    text += p.store()[at.attacker].id + " " + to_string(at.kind) + "s " +
            p.store()[at.target].id + " (at " + p.store()[at.locus].id + ")\n";
  for (const auto& [a, b] : p.graph().defeats)
    text += p.store()[a].id + " defeats " + p.store()[b].id + "\n";
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_extensions(const RunConfig& cfg) {
  argonto::Pipeline p(load_ontology(cfg), pipeline_options(cfg));
  emit_dumps(cfg, p);
  const auto& exts = p.extensions(semantics_of(cfg.semantics));
  ordered_json j;
  j["semantics"] = cfg.semantics;
  j["extensions"] = ordered_json::array();
  std::string text;
  for (const auto& ext : exts) {
    ordered_json ids = ordered_json::array();
    std::string line;
    for (int idx : ext) {
      ids.push_back(p.store()[idx].id);
      line += (line.empty() ? "" : " ") + p.store()[idx].id;
    }
    j["extensions"].push_back(std::move(ids));
    text += "{" + line + "}\n";
  }
  print_payload(cfg, j, text);
  return kExitAnswered;
}

int run_well_defined(const RunConfig& cfg) {
  argonto::Ontology onto = load_ontology(cfg);
  auto opt = pipeline_options(cfg);
  argonto::ArgumentationTheory th = argonto::translate_ontology(onto, opt.translation);
  auto report = argonto::check_well_defined(th, opt.engine);
  ordered_json j = argonto::well_defined_json(report);
  std::string text = std::string(report.pass() ? "well-defined" : "not well-defined") + "\n";
  for (const auto& w : report.premise_witnesses)
    text += "  inconsistent premises: " + w.argument + " yields " + w.formula + "\n";
  for (const auto& w : report.transposition_witnesses)
    text += "  missing transposition: " + w.rule + " at body position " +
            std::to_string(w.body_position) + "\n";
  for (const auto& w : report.classicality_witnesses)
    text += "  non-classical subset around '" + w.removed + "'\n";
  for (const auto& n : report.notes) text += "  note: " + n + "\n";
  print_payload(cfg, j, text);
  return report.pass() ? kExitAnswered : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"argumentation reasoning over legal ontologies"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("ARGONTO_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.max_arguments = static_cast<size_t>(v);
  }

  std::string assertion;
  std::string individual;
  std::string cls_text;

  auto add_common = [&](CLI::App* sub, bool takes_query) {
    sub->add_option("input", cfg.input, "ontology file")->required();
    sub->add_option("--semantics", cfg.semantics, "extension semantics")
        ->check(CLI::IsMember({"gr", "co", "pr"}))
        ->capture_default_str();
    if (takes_query)
      sub->add_option("--mode", cfg.mode, "acceptance mode")
          ->check(CLI::IsMember({"sceptical", "credulous"}))
          ->capture_default_str();
    sub->add_option("--priority", cfg.priorities,
                    "priority override 'a<b' or 'a=b'; replaces the file's PRIORITY lines");
    sub->add_option("--max-arguments", cfg.max_arguments,
                    "argument construction budget (env ARGONTO_BUDGET)");
    sub->add_option("--max-skolem-depth", cfg.max_skolem_depth,
                    "nesting bound for introduced individuals")
        ->capture_default_str();
    sub->add_flag("!--no-auto-transpose", cfg.auto_transpose,
                  "skip closing strict rules under transposition");
    sub->add_flag("!--no-table-verbatim", cfg.table_verbatim,
                  "drop the extra successor-introducing rule of value restrictions");
    sub->add_option("--emit-theory", cfg.emit_theory, "dump the compiled theory as JSON");
    sub->add_option("--emit-arguments", cfg.emit_arguments,
                    "dump the argument store as JSON");
    sub->add_option("--emit-af", cfg.emit_af,
                    "dump attacks and the defeat graph as JSON");
    return sub;
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(std::move(choices)))
        ->capture_default_str();
  };

  auto* c_check = add_common(app.add_subcommand("check", "knowledge-base consistency"), false);
  add_format(c_check, {"json", "text"});

  auto* c_accept = add_common(app.add_subcommand("accept", "assertion acceptance"), true);
  c_accept->add_option("--assert", assertion, "ground assertion, e.g. 'LeaveCar(PS1)'")
      ->required();
  add_format(c_accept, {"json", "text"});

  auto* c_instance = add_common(app.add_subcommand("instance", "class membership"), true);
  c_instance->add_option("--individual", individual, "individual name")->required();
  c_instance->add_option("--class", cls_text, "class expression, e.g. 'Driver AND Sober'")
      ->required();
  c_instance->add_flag("--same-extension", cfg.same_extension,
                       "credulous compound queries must witness inside one extension");
  add_format(c_instance, {"json", "text"});

  auto* c_conclusions =
      add_common(app.add_subcommand("conclusions", "extension conclusion sets"), true);
  add_format(c_conclusions, {"json", "text"});

  auto* c_instances_of =
      add_common(app.add_subcommand("instances-of", "individuals under a class"), true);
  c_instances_of->add_option("--class", cls_text, "class expression")->required();
  c_instances_of->add_flag("--same-extension", cfg.same_extension,
                           "credulous compound queries must witness inside one extension");
  add_format(c_instances_of, {"json", "text"});

  auto* c_concepts_of =
      add_common(app.add_subcommand("concepts-of", "classes of an individual"), true);
  c_concepts_of->add_option("--individual", individual, "individual name")->required();
  add_format(c_concepts_of, {"json", "text"});

  auto* c_explain = add_common(app.add_subcommand("explain", "support and defense"), true);
  c_explain->add_option("--assert", assertion, "ground assertion")->required();
  c_explain->add_flag("--norms-only", cfg.norms_only,
                      "list only defeasible norms in the supporting rule sets");
  add_format(c_explain, {"json", "text"});

  auto* c_arguments = add_common(app.add_subcommand("arguments", "constructed arguments"), false);
  add_format(c_arguments, {"json", "text"});

  auto* c_af = add_common(app.add_subcommand("af", "attacks and defeats"), false);
  add_format(c_af, {"json", "text", "apx"});

  auto* c_extensions = add_common(app.add_subcommand("extensions", "extension enumeration"), false);
  add_format(c_extensions, {"json", "text"});

  auto* c_well = add_common(app.add_subcommand("well-defined", "theory structure checks"), false);
  add_format(c_well, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitAnswered : kExitUsage;
  }

  try {
    if (c_check->parsed()) return run_check(cfg);
    if (c_accept->parsed()) return run_accept(cfg, assertion);
    if (c_instance->parsed()) return run_instance(cfg, individual, cls_text);
    if (c_conclusions->parsed()) return run_conclusions(cfg);
    if (c_instances_of->parsed()) return run_instances_of(cfg, cls_text);
    if (c_concepts_of->parsed()) return run_concepts_of(cfg, individual);
    if (c_explain->parsed()) return run_explain(cfg, assertion);
    if (c_arguments->parsed()) return run_arguments(cfg);
    if (c_af->parsed()) return run_af(cfg);
    if (c_extensions->parsed()) return run_extensions(cfg);
    if (c_well->parsed()) return run_well_defined(cfg);
  } catch (const argonto::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const argonto::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const argonto::TranslationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const argonto::TaskError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
