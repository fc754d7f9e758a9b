#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "argonto/parser.hpp"
#include "argonto/tasks.hpp"

using namespace argonto;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(CORPUS_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Pipeline make_pipeline(const std::string& name) {
  return Pipeline(parse_ontology(slurp(name)));
}

// The traffic ontology with the priority declaration turned around, so the
// public-safety norm outranks the protection-of-life ones.
Pipeline reversed_traffic() {
  Ontology o = parse_ontology(slurp("av.onto"));
  o.priorities = {{"p1", "p2", false}};
  o.priority_order = PriorityOrder::build(o.principles, o.priorities);
  return Pipeline(std::move(o));
}

std::vector<std::string> ids(const Pipeline& p, const std::vector<int>& idxs) {
  std::vector<std::string> out;
  for (int i : idxs) out.push_back(p.store()[i].id);
  return out;
}

Literal query(const std::string& text) { return parse_ground_literal(text); }

}  // namespace

TEST_CASE("the pipeline assembles and caches the traffic scenario") {
  Pipeline p = make_pipeline("av.onto");
  CHECK(p.store().size() == 22);
  CHECK(p.attacks().size() == 20);
  CHECK(p.graph().defeats.size() == 14);
  const auto& first = p.extensions(Semantics::Grounded);
  CHECK(&p.extensions(Semantics::Grounded) == &first);  // computed once
  REQUIRE(first.size() == 1);
  CHECK(ids(p, first[0]) ==
        std::vector<std::string>{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A9", "A11",
                                 "A12", "A13", "A14", "A15", "A16", "A17", "A19", "A21"});
  // The same single extension under all three semantics.
  CHECK(p.extensions(Semantics::Complete) == first);
  CHECK(p.extensions(Semantics::Preferred) == first);
}

TEST_CASE("justification flags match extension membership") {
  Pipeline p = make_pipeline("av.onto");
  auto sceptical = p.justified(Mode::Sceptical, Semantics::Grounded);
  auto credulous = p.justified(Mode::Credulous, Semantics::Grounded);
  CHECK(sceptical == credulous);  // a single extension collapses the modes
  const auto& ext = p.extensions(Semantics::Grounded)[0];
  for (int i = 0; i < p.graph().n; ++i) {
    bool member = std::binary_search(ext.begin(), ext.end(), i);
    CHECK(sceptical[static_cast<size_t>(i)] == member);
  }
}

TEST_CASE("consistency holds exactly when no argument attacks another") {
  Pipeline quiet = make_pipeline("abox_only.onto");
  auto ok = check_consistency(quiet);
  CHECK(ok.consistent);
  CHECK(ok.witnesses.empty());

  Pipeline clash = make_pipeline("inconsistent_abox.onto");
  auto bad = check_consistency(clash);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.witnesses == std::vector<std::pair<std::string, std::string>>{
                             {"A1", "A2"}, {"A2", "A1"}});
}

TEST_CASE("consistency witnesses are capped and deduplicated") {
  Pipeline p = make_pipeline("av.onto");
  auto r = check_consistency(p, 3);
  CHECK_FALSE(r.consistent);
  CHECK(r.witnesses.size() == 3);
  std::set<std::pair<int, int>> pairs;
  for (const auto& at : p.attacks()) pairs.emplace(at.attacker, at.target);
  auto full = check_consistency(p, 1000);
  CHECK(full.witnesses.size() == pairs.size());
}

TEST_CASE("assertion acceptance follows the priority ordering") {
  Pipeline p = make_pipeline("av.onto");
  for (Semantics s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred}) {
    auto leave = accept_assertion(p, query("LeaveCar(PS1)"), Mode::Sceptical, s);
    CHECK(leave.accepted);
    CHECK(leave.witnesses == std::vector<std::string>{"A19", "A21"});
    auto stay = accept_assertion(p, query("~LeaveCar(PS1)"), Mode::Sceptical, s);
    CHECK_FALSE(stay.accepted);
    CHECK(stay.witnesses.empty());
    CHECK(stay.notes.empty());
  }

  Pipeline r = reversed_traffic();
  for (Semantics s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred}) {
    CHECK(accept_assertion(r, query("~LeaveCar(PS1)"), Mode::Sceptical, s).accepted);
    CHECK_FALSE(accept_assertion(r, query("LeaveCar(PS1)"), Mode::Sceptical, s).accepted);
  }
}

TEST_CASE("unknown predicates and wrong arities are reported, not answered") {
  Pipeline p = make_pipeline("av.onto");
  auto unknown = accept_assertion(p, query("Pilot(PS1)"), Mode::Sceptical,
                                  Semantics::Grounded);
  CHECK_FALSE(unknown.accepted);
  CHECK(unknown.notes == std::vector<std::string>{"unknown predicate 'Pilot'"});

  auto wrong = accept_assertion(p, query("Driver(PS1,Injury1)"), Mode::Sceptical,
                                Semantics::Grounded);
  CHECK_FALSE(wrong.accepted);
  CHECK(wrong.notes == std::vector<std::string>{"predicate 'Driver' takes 1 argument(s)"});
}

TEST_CASE("instance checks cover every class constructor") {
  Pipeline p = make_pipeline("av.onto");
  Mode m = Mode::Sceptical;
  Semantics s = Semantics::Grounded;

  auto atomic = check_instance(p, "PS1", parse_concept_expr("Intoxicated"), m, s);
  CHECK(atomic.holds);
  CHECK(atomic.witnesses == std::vector<std::string>{"A2"});

  auto negated = check_instance(p, "PS1", parse_concept_expr("NOT Sober"), m, s);
  CHECK(negated.holds);
  CHECK(negated.witnesses == std::vector<std::string>{"A9"});

  CHECK_FALSE(check_instance(p, "PS1", parse_concept_expr("Sober"), m, s).holds);

  auto conj = check_instance(p, "PS1", parse_concept_expr("Driver AND Intoxicated"), m, s);
  CHECK(conj.holds);
  CHECK(conj.witnesses == std::vector<std::string>{"A1", "A2"});

  auto disj = check_instance(p, "PS1", parse_concept_expr("Sober OR Driver"), m, s);
  CHECK(disj.holds);
  CHECK(disj.witnesses == std::vector<std::string>{"A1"});

  auto exists = check_instance(p, "PS1", parse_concept_expr("EXISTS hitAndRun.Injury"), m, s);
  CHECK(exists.holds);
  CHECK(exists.witnesses == std::vector<std::string>{"A4", "A3"});

  auto forall = check_instance(p, "PS1", parse_concept_expr("FORALL hitAndRun.Injury"), m, s);
  CHECK(forall.holds);
  CHECK(forall.witnesses == std::vector<std::string>{"A4", "A3"});
}

TEST_CASE("a universal restriction without successors is vacuously false") {
  Pipeline p = make_pipeline("av.onto");
  auto r = check_instance(p, "Injury1", parse_concept_expr("FORALL causeDeath.Injury"),
                          Mode::Sceptical, Semantics::Grounded);
  CHECK_FALSE(r.holds);
  CHECK(r.notes ==
        std::vector<std::string>{"no justified 'causeDeath' successor of 'Injury1'"});
}

TEST_CASE("compound queries reject non-atomic operands") {
  Pipeline p = make_pipeline("av.onto");
  CHECK_THROWS_AS(check_instance(p, "PS1", parse_concept_expr("Driver AND EXISTS hitAndRun.Injury"),
                                 Mode::Sceptical, Semantics::Grounded),
                  TaskError);
  try {
    check_instance(p, "PS1", parse_concept_expr("(NOT Sober) OR Driver"), Mode::Sceptical,
                   Semantics::Grounded);
    FAIL("expected a BadQuery error");
  } catch (const TaskError& e) {
    CHECK(e.code == TaskError::Code::BadQuery);
  }
}

TEST_CASE("credulous conjunctions can be confined to one extension") {
  Pipeline p = make_pipeline("split.onto");
  REQUIRE(p.extensions(Semantics::Preferred).size() == 2);
  auto cls = parse_concept_expr("Dry AND Wet");

  // Cherry-picking across extensions accepts the pair...
  CHECK(check_instance(p, "c", cls, Mode::Credulous, Semantics::Preferred).holds);
  // ...but no single extension supports both conjuncts.
  CHECK_FALSE(
      check_instance(p, "c", cls, Mode::Credulous, Semantics::Preferred, true).holds);

  // A pair that does live together stays accepted under the stricter reading.
  auto compatible = parse_concept_expr("Hot AND Dry");
  CHECK(check_instance(p, "c", compatible, Mode::Credulous, Semantics::Preferred, true).holds);

  // Sceptically, neither side of the split is accepted at all.
  CHECK_FALSE(check_instance(p, "c", parse_concept_expr("Dry"), Mode::Sceptical,
                             Semantics::Preferred)
                  .holds);
}

TEST_CASE("extension conclusions collect the accepted knowledge") {
  Pipeline p = make_pipeline("av.onto");
  auto sets = extension_conclusions(p, Semantics::Grounded);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<std::string>{
                       "AggravatedPunishment(PS1)",
                       "BeRevokedDrivingLicense(PS1)",
                       "CauseAccident(PS1)",
                       "Driver(PS1)",
                       "Injury(Injury1)",
                       "Intoxicated(PS1)",
                       "LeaveCar(PS1)",
                       "NeedEmergencyAid(Injury1)",
                       "TakeCriminalResponsibility(PS1)",
                       "causeDeath(PS1,Injury1)",
                       "doNecessaryAid(PS1,Injury1)",
                       "hitAndRun(PS1,Injury1)",
                       "transferToSafePlace(PS1,Injury1)",
                       "~Sober(PS1)",
                   });
}

TEST_CASE("retrieval tasks list individuals and concepts") {
  Pipeline p = make_pipeline("av.onto");
  CHECK(instances_of(p, parse_concept_expr("Intoxicated"), Mode::Sceptical,
                     Semantics::Grounded) == std::vector<std::string>{"PS1"});
  CHECK(instances_of(p, parse_concept_expr("Sober"), Mode::Sceptical,
                     Semantics::Grounded)
            .empty());
  CHECK(instances_of(p, parse_concept_expr("Injury"), Mode::Sceptical,
                     Semantics::Grounded) == std::vector<std::string>{"Injury1"});

  CHECK(concepts_of(p, "PS1", Mode::Sceptical, Semantics::Grounded) ==
        std::vector<std::string>{"AggravatedPunishment", "BeRevokedDrivingLicense",
                                 "CauseAccident", "Driver", "Intoxicated", "LeaveCar",
                                 "TakeCriminalResponsibility"});
  CHECK(concepts_of(p, "Injury1", Mode::Sceptical, Semantics::Grounded) ==
        std::vector<std::string>{"Injury", "NeedEmergencyAid"});
}

TEST_CASE("explanations carry the support and the defence") {
  Pipeline p = make_pipeline("av.onto");
  auto exps = explain_assertion(p, query("transferToSafePlace(PS1,Injury1)"),
                                Mode::Sceptical, Semantics::Grounded);
  REQUIRE(exps.size() == 1);
  const auto& e = exps[0];
  CHECK(e.how.argument == "A16");
  CHECK(e.how.premises ==
        std::vector<std::string>{"CauseAccident(PS1)", "Injury(Injury1)"});
  CHECK(e.how.rules == std::vector<std::string>{"r8"});
  CHECK(e.how.norms == std::vector<std::string>{"r8"});
  CHECK(e.ordering == std::vector<std::string>{"p2 < p1"});
  // A20's counter-argument ranks strictly below A16, so its rebuttal never
  // becomes a defeat: there is nothing to defend against.
  CHECK(e.why.empty());
}

TEST_CASE("explaining the flipped verdict shows the winning norm") {
  Pipeline r = reversed_traffic();
  auto exps = explain_assertion(r, query("~LeaveCar(PS1)"), Mode::Sceptical,
                                Semantics::Grounded);
  REQUIRE(exps.size() == 1);
  CHECK(exps[0].how.argument == "A10");
  CHECK(exps[0].how.premises == std::vector<std::string>{"Intoxicated(PS1)"});
  CHECK(exps[0].how.rules == std::vector<std::string>{"r2"});
  CHECK(exps[0].ordering == std::vector<std::string>{"p1 < p2"});
  std::vector<std::string> defenders;
  for (const auto& d : exps[0].why) defenders.push_back(d.argument);
  CHECK(defenders == std::vector<std::string>{"A9"});
  CHECK(exps[0].why[0].premises == std::vector<std::string>{"Intoxicated(PS1)"});
  CHECK(exps[0].why[0].rules == std::vector<std::string>{"r10'"});
  CHECK(exps[0].why[0].norms.empty());
}

TEST_CASE("explanation errors distinguish unknown from rejected") {
  Pipeline p = make_pipeline("av.onto");
  try {
    explain_assertion(p, query("Pilot(PS1)"), Mode::Sceptical, Semantics::Grounded);
    FAIL("expected an Unknown error");
  } catch (const TaskError& e) {
    CHECK(e.code == TaskError::Code::Unknown);
  }
  try {
    explain_assertion(p, query("~LeaveCar(PS1)"), Mode::Sceptical, Semantics::Grounded);
    FAIL("expected a NotAccepted error");
  } catch (const TaskError& e) {
    CHECK(e.code == TaskError::Code::NotAccepted);
  }
}
