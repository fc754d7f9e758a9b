// End-to-end tests against the installed binary: every subcommand, the JSON
// envelopes, exit codes, and the interplay of flags and environment knobs.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout, plus stderr when merged
};

// Run a shell command, capture stdout and the exit code. Callers quote their
// own arguments; corpus paths contain no shell metacharacters.
RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ARGONTO_BIN) + " " + args;
  if (merge_stderr) cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

json parse(const RunResult& r) {
  INFO(r.output);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("check reports inconsistency with attack witnesses and exit 1") {
  auto r = run("check " + corpus("av.onto"));
  CHECK(r.exit_code == 1);
  json j = parse(r);
  CHECK(j["task"] == "check");
  CHECK(j["semantics"] == "gr");
  CHECK(j["mode"] == "sceptical");
  CHECK(j["answer"] == "inconsistent");
  CHECK(j["diagnostics"] == json::array());
  // Ten witness pairs (the default cap), ordered by attacker then target.
  json expected = json::array({
      json::array({"A9", "A8"}),
      json::array({"A9", "A18"}),
      json::array({"A18", "A2"}),
      json::array({"A18", "A9"}),
      json::array({"A18", "A10"}),
      json::array({"A18", "A11"}),
      json::array({"A18", "A12"}),
      json::array({"A18", "A15"}),
      json::array({"A18", "A20"}),
      json::array({"A18", "A22"}),
  });
  CHECK(j["witnesses"] == expected);
}

TEST_CASE("check accepts a conflict-free knowledge base with exit 0") {
  auto r = run("check " + corpus("abox_only.onto"));
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["answer"] == "consistent");
  CHECK(j["witnesses"] == json::array());
}

TEST_CASE("accept answers flip with the priority ordering") {
  auto leave = run("accept " + corpus("av.onto") + " --assert 'LeaveCar(PS1)'");
  CHECK(leave.exit_code == 0);
  json j = parse(leave);
  CHECK(j["answer"] == true);
  CHECK(j["witnesses"] == json::array({"A19", "A21"}));

  auto stay = run("accept " + corpus("av.onto") + " --assert '~LeaveCar(PS1)'");
  CHECK(parse(stay)["answer"] == false);

  auto reversed = run("accept " + corpus("av.onto") +
                      " --assert '~LeaveCar(PS1)' --priority 'p1<p2'");
  CHECK(reversed.exit_code == 0);
  json rj = parse(reversed);
  CHECK(rj["answer"] == true);
  CHECK(rj["witnesses"] == json::array({"A10"}));
}

TEST_CASE("the priority override matches an edited PRIORITY line") {
  // Rewrite the declaration in a copy of the file and compare answers.
  std::ifstream in(corpus("av.onto"));
  REQUIRE(in);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto pos = text.find("PRIORITY p2 < p1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 16, "PRIORITY p1 < p2");
  std::string copy = "override_equiv.onto";
  std::ofstream out(copy);
  out << text;
  out.close();

  auto from_file = run("accept " + copy + " --assert '~LeaveCar(PS1)'");
  auto from_flag = run("accept " + corpus("av.onto") +
                       " --assert '~LeaveCar(PS1)' --priority 'p1<p2'");
  json a = parse(from_file), b = parse(from_flag);
  CHECK(a["answer"] == b["answer"]);
  CHECK(a["witnesses"] == b["witnesses"]);
  std::remove(copy.c_str());
}

TEST_CASE("acceptance notes surface in the diagnostics") {
  auto r = run("accept " + corpus("av.onto") + " --assert 'Pilot(PS1)'");
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["answer"] == false);
  CHECK(j["diagnostics"] == json::array({"unknown predicate 'Pilot'"}));
}

TEST_CASE("instance queries answer through the argumentation pipeline") {
  auto r = run("instance " + corpus("av.onto") +
               " --individual PS1 --class 'EXISTS hitAndRun.Injury'");
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["answer"] == true);
  CHECK(j["witnesses"] == json::array({"A4", "A3"}));

  auto neg = run("instance " + corpus("av.onto") + " --individual PS1 --class 'Sober'");
  CHECK(parse(neg)["answer"] == false);
}

TEST_CASE("same-extension confines credulous conjunctions") {
  std::string base = "instance " + corpus("split.onto") +
                     " --individual c --class 'Dry AND Wet' --mode credulous"
                     " --semantics pr";
  CHECK(parse(run(base))["answer"] == true);
  CHECK(parse(run(base + " --same-extension"))["answer"] == false);
}

TEST_CASE("conclusions lists the accepted knowledge per extension") {
  auto r = run("conclusions " + corpus("av.onto"));
  CHECK(r.exit_code == 0);
  json j = parse(r);
  REQUIRE(j["answer"].size() == 1);
  CHECK(j["answer"][0].size() == 14);
  CHECK(j["answer"][0][0] == "AggravatedPunishment(PS1)");
  CHECK(j["answer"][0][13] == "~Sober(PS1)");
}

TEST_CASE("retrieval subcommands answer with name lists") {
  auto inst = run("instances-of " + corpus("av.onto") + " --class 'Intoxicated'");
  CHECK(parse(inst)["answer"] == json::array({"PS1"}));

  auto conc = run("concepts-of " + corpus("av.onto") + " --individual Injury1");
  CHECK(parse(conc)["answer"] == json::array({"Injury", "NeedEmergencyAid"}));
}

TEST_CASE("explain produces support, defense, and the ordering in force") {
  auto r = run("explain " + corpus("av.onto") + " --assert 'LeaveCar(PS1)'");
  CHECK(r.exit_code == 0);
  json j = parse(r);
  CHECK(j["answer"] == "accepted");
  REQUIRE(j["explanations"].size() == 2);
  const json& first = j["explanations"][0];
  CHECK(first["how"]["argument"] == "A19");
  CHECK(first["how"]["premises"] ==
        json::array({"CauseAccident(PS1)", "Injury(Injury1)"}));
  CHECK(first["how"]["rules"] == json::array({"r11", "r8"}));
  CHECK(first["why"] == json::array());
  CHECK(first["ordering"] == json::array({"p2 < p1"}));
  CHECK(j["explanations"][1]["how"]["argument"] == "A21");
}

TEST_CASE("norms-only trims the how-part to the defeasible rules") {
  auto r = run("explain " + corpus("av.onto") + " --assert 'LeaveCar(PS1)' --norms-only");
  json j = parse(r);
  CHECK(j["explanations"][0]["how"]["rules"] == json::array({"r8"}));
}

TEST_CASE("explaining under the reversed ordering shows the defense") {
  auto r = run("explain " + corpus("av.onto") +
               " --assert '~LeaveCar(PS1)' --priority 'p1<p2'");
  CHECK(r.exit_code == 0);
  json j = parse(r);
  REQUIRE(j["explanations"].size() == 1);
  const json& e = j["explanations"][0];
  CHECK(e["how"]["argument"] == "A10");
  CHECK(e["how"]["rules"] == json::array({"r2"}));
  REQUIRE(e["why"].size() == 1);
  CHECK(e["why"][0]["argument"] == "A9");
  CHECK(e["why"][0]["rules"] == json::array({"r10'"}));
  CHECK(e["ordering"] == json::array({"p1 < p2"}));
}

TEST_CASE("explain distinguishes unknown assertions from rejected ones") {
  auto unknown = run("explain " + corpus("av.onto") + " --assert 'Pilot(PS1)'");
  CHECK(unknown.exit_code == 1);
  CHECK(parse(unknown)["answer"] == "unknown");

  auto rejected = run("explain " + corpus("av.onto") + " --assert '~LeaveCar(PS1)'");
  CHECK(rejected.exit_code == 1);
  CHECK(parse(rejected)["answer"] == "not accepted");
}

TEST_CASE("arguments dumps the store with derivation structure") {
  auto r = run("arguments " + corpus("av.onto"));
  CHECK(r.exit_code == 0);
  json j = parse(r);
  REQUIRE(j["arguments"].size() == 22);
  CHECK(j["arguments"][0]["id"] == "A1");
  CHECK(j["arguments"][0]["conclusion"] == "Driver(PS1)");
  CHECK(j["arguments"][0].count("topRule") == 0);
  CHECK(j["arguments"][8]["id"] == "A9");
  CHECK(j["arguments"][8]["conclusion"] == "~Sober(PS1)");
  CHECK(j["arguments"][8]["topRule"] == "r10'");
  CHECK(j["arguments"][8]["subs"] == json::array({"A2"}));
  CHECK(j["rounds"] == 2);
  CHECK(j["individuals"].size() == 2);
}

TEST_CASE("af dumps attacks and defeats, and apx lists the defeat graph") {
  auto r = run("af " + corpus("av.onto"));
  json j = parse(r);
  CHECK(j["arguments"].size() == 22);
  CHECK(j["attacks"].size() == 20);
  CHECK(j["defeats"].size() == 14);
  CHECK(j["attacks"][0]["attacker"] == "A9");
  CHECK(j["attacks"][0]["target"] == "A8");
  CHECK(j["attacks"][0]["locus"] == "A8");
  CHECK(j["attacks"][0]["kind"] == "rebut");

  auto apx = run("af " + corpus("av.onto") + " --format apx");
  CHECK(apx.exit_code == 0);
  CHECK(apx.output.find("arg(A1).\n") == 0);
  CHECK(apx.output.find("arg(A22).\n") != std::string::npos);
  CHECK(apx.output.find("att(A9,A8).\n") != std::string::npos);
  CHECK(apx.output.find("att(A21,A22).\n") != std::string::npos);
  // Attacks that the preferences filter out never reach the defeat graph.
  CHECK(apx.output.find("att(A20,A16).") == std::string::npos);
}

TEST_CASE("extensions enumerates under each semantics") {
  auto gr = run("extensions " + corpus("av.onto") + " --semantics gr");
  json j = parse(gr);
  CHECK(j["semantics"] == "gr");
  REQUIRE(j["extensions"].size() == 1);
  CHECK(j["extensions"][0].size() == 17);
  CHECK(j["extensions"][0][0] == "A1");

  auto pr = run("extensions " + corpus("split.onto") + " --semantics pr");
  json s = parse(pr);
  CHECK(s["extensions"] ==
        json::array({json::array({"A1", "A2", "A4"}), json::array({"A1", "A3", "A5"})}));
}

TEST_CASE("well-defined passes the traffic theory and flags the stripped one") {
  auto ok = run("well-defined " + corpus("av.onto"));
  CHECK(ok.exit_code == 0);
  json j = parse(ok);
  CHECK(j["pass"] == true);

  auto bad = run("well-defined " + corpus("av.onto") + " --no-auto-transpose");
  CHECK(bad.exit_code == 1);
  json b = parse(bad);
  CHECK(b["pass"] == false);
  CHECK(b["transpositionWitnesses"] ==
        json::array({json{{"rule", "r11"}, {"bodyPosition", 1}},
                     json{{"rule", "r12"}, {"bodyPosition", 1}}}));
}

TEST_CASE("text format prints a human-readable answer") {
  auto r = run("check " + corpus("av.onto") + " --format text");
  CHECK(r.exit_code == 1);
  CHECK(r.output.rfind("inconsistent\n", 0) == 0);

  auto acc = run("accept " + corpus("av.onto") + " --assert 'LeaveCar(PS1)' --format text");
  CHECK(acc.output == "accepted\n  A19\n  A21\n");
}

TEST_CASE("repeated runs are byte-identical") {
  std::string cmd = "af " + corpus("av.onto");
  auto first = run(cmd);
  auto second = run(cmd);
  CHECK(first.output == second.output);
  CHECK_FALSE(first.output.empty());
}

TEST_CASE("parse and usage failures exit with code 2") {
  CHECK(run("check " + corpus("negative/undeclared_principle.onto"), true).exit_code == 2);
  CHECK(run("bogus-subcommand", true).exit_code == 2);
  CHECK(run("check " + corpus("av.onto") + " --semantics xx", true).exit_code == 2);
  CHECK(run("check " + corpus("av.onto") + " --priority 'p1p2'", true).exit_code == 2);
  CHECK(run("check no_such_file.onto", true).exit_code == 2);
  CHECK(run("check " + corpus("av.onto") + " --priority 'p9<p1'", true).exit_code == 2);
}

TEST_CASE("the help text lists every subcommand and exits cleanly") {
  auto r = run("--help");
  CHECK(r.exit_code == 0);
  for (const char* sub : {"check", "accept", "instance", "conclusions", "instances-of",
                          "concepts-of", "explain", "arguments", "af", "extensions",
                          "well-defined"})
    CHECK(r.output.find(sub) != std::string::npos);
}

TEST_CASE("the argument budget exits with code 3") {
  auto r = run("check " + corpus("av.onto") + " --max-arguments 5", true);
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("budget") != std::string::npos);
}

TEST_CASE("the budget environment variable is honored, flags win over it") {
  std::string cmd = "ARGONTO_BUDGET=5 " + std::string(ARGONTO_BIN) + " check " +
                    corpus("av.onto") + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 3);
  std::string override_cmd = "ARGONTO_BUDGET=5 " + std::string(ARGONTO_BIN) + " check " +
                             corpus("av.onto") + " --max-arguments 100000 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(override_cmd.c_str())) == 1);
}

TEST_CASE("emit flags write side dumps next to the answer") {
  std::string theory_path = "emit_theory.json";
  std::string args_path = "emit_arguments.json";
  std::string af_path = "emit_af.json";
  auto r = run("check " + corpus("av.onto") + " --emit-theory " + theory_path +
               " --emit-arguments " + args_path + " --emit-af " + af_path);
  CHECK(r.exit_code == 1);

  std::ifstream tin(theory_path);
  REQUIRE(tin);
  json theory = json::parse(tin);
  CHECK(theory["premises"].size() == 7);
  CHECK(theory["rules"].size() == 15);
  CHECK(theory["principles"].size() == 3);
  CHECK(theory["priorities"] ==
        json::array({json{{"lower", "p2"}, {"relation", "<"}, {"higher", "p1"}}}));

  std::ifstream ain(args_path);
  REQUIRE(ain);
  CHECK(json::parse(ain)["arguments"].size() == 22);

  std::ifstream fin(af_path);
  REQUIRE(fin);
  CHECK(json::parse(fin)["defeats"].size() == 14);

  std::remove(theory_path.c_str());
  std::remove(args_path.c_str());
  std::remove(af_path.c_str());
}
