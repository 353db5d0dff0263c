#include <gtest/gtest.h>

#include <json.hpp>

#include "cochain/commands.hpp"
#include "cochain/cone.hpp"
#include "cochain/random.hpp"

namespace cochain {
namespace {

using nlohmann::json;

// A = (F --1--> F) over Q, P = F in degree 0.
const char* kBasic = R"({
  "field": "Q",
  "objects": {
    "A": {"dims": {"0": 1, "1": 1}, "diff": {"0": [[1]]}},
    "P": {"dims": {"0": 1}}
  },
  "maps": {
    "idA": {"from": "A", "to": "A", "components": {"0": [[1]], "1": [[1]]}},
    "zeroA": {"from": "A", "to": "A", "components": {}},
    "idP": {"from": "P", "to": "P", "components": {"0": [[1]]}},
    "zeroP": {"from": "P", "to": "P", "components": {}},
    "twoP": {"from": "P", "to": "P", "components": {"0": [[2]]}}
  }
})";

CommandOutcome run(const std::string& text, std::vector<std::string> args) { return run_cli(text, args); }

TEST(Commands, Validate) {
  const CommandOutcome out = run(kBasic, {"validate"});
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(json::parse(out.output)["maps"], 5);
}

TEST(Commands, QisVerdicts) {
  const CommandOutcome yes = run(kBasic, {"qis", "idP"});
  EXPECT_EQ(yes.exit_code, 0);
  EXPECT_EQ(json::parse(yes.output)["quasi_isomorphism"], true);
  const CommandOutcome no = run(kBasic, {"qis", "zeroP"});
  EXPECT_EQ(no.exit_code, 1);
  EXPECT_EQ(json::parse(no.output)["quasi_isomorphism"], false);
  // Over Q a zero map on an acyclic complex is still a quasi-isomorphism.
  EXPECT_EQ(run(kBasic, {"qis", "zeroA"}).exit_code, 0);
}

TEST(Commands, HomotopicPrintsWitness) {
  const CommandOutcome out = run(kBasic, {"homotopic", "idA", "zeroA"});
  ASSERT_EQ(out.exit_code, 0);
  const json report = json::parse(out.output);
  EXPECT_EQ(report["homotopic"], true);
  EXPECT_EQ(report["witness"]["components"]["1"], json::parse("[[-1]]"));
}

TEST(Commands, HomotopicNone) {
  const CommandOutcome out = run(kBasic, {"homotopic", "idP", "zeroP"});
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_EQ(json::parse(out.output)["witness"], "none");
}

TEST(Commands, Cohomology) {
  const CommandOutcome out = run(kBasic, {"cohomology", "P"});
  ASSERT_EQ(out.exit_code, 0);
  const json report = json::parse(out.output);
  EXPECT_EQ(report["degrees"][0]["dim"], 1);
  EXPECT_EQ(report["degrees"][0]["representatives"], json::parse("[[1]]"));
  EXPECT_EQ(json::parse(run(kBasic, {"cohomology", "A"}).output)["degrees"][1]["dim"], 0);
}

TEST(Commands, Les) {
  const CommandOutcome out = run(kBasic, {"les", "twoP"});
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(json::parse(out.output)["rotated_exact"], true);
}

TEST(Commands, ShiftRoundTrips) {
  const CommandOutcome out = run(kBasic, {"shift", "A", "1"});
  ASSERT_EQ(out.exit_code, 0);
  const Session s = parse_session(out.output);
  EXPECT_EQ(s.object("A_shift1"), shift(s.object("A"), 1));
  EXPECT_EQ(emit_session(s), out.output);
}

TEST(Commands, ConeRoundTrips) {
  const CommandOutcome out = run(kBasic, {"cone", "twoP"});
  ASSERT_EQ(out.exit_code, 0);
  const Session s = parse_session(out.output);
  const MappingCone mc = mapping_cone(s.map("twoP").map);
  EXPECT_EQ(s.object("cone_twoP"), mc.complex);
  EXPECT_EQ(s.map("cone_twoP_incl").map, mc.inclusion);
  EXPECT_EQ(s.map("cone_twoP_proj").map, mc.projection);
  EXPECT_EQ(s.map("cone_twoP_proj").to, "P_shift1");
  EXPECT_EQ(emit_session(s), out.output);
}

TEST(Commands, FlipThenQis) {
  const CommandOutcome out = run(kBasic, {"flip", "twoP", "idP"});
  ASSERT_EQ(out.exit_code, 0) << out.diagnostics;
  const Session s = parse_session(out.output);
  EXPECT_EQ(s.map("gamma2").from, "K");
  EXPECT_EQ(s.homotopy("h").to, "P");
  EXPECT_EQ(run(out.output, {"qis", "gamma2"}).exit_code, 0);
  EXPECT_EQ(emit_session(s), out.output);
}

TEST(Commands, FlipRejectsNonQuasiIso) {
  const CommandOutcome out = run(kBasic, {"flip", "idP", "zeroP"});
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_FALSE(out.diagnostics.empty());
}

TEST(Commands, LiftComposeAndEquivalence) {
  CommandOutcome out = run(kBasic, {"lift", "twoP"});
  ASSERT_EQ(out.exit_code, 0);
  out = run(out.output, {"lift", "idP"});
  ASSERT_EQ(out.exit_code, 0);
  out = run(out.output, {"compose", "lift_twoP", "lift_idP"});
  ASSERT_EQ(out.exit_code, 0) << out.diagnostics;
  const Session s = parse_session(out.output);
  const RoofEntry& c = s.roof("compose_lift_twoP_lift_idP");
  EXPECT_TRUE(is_quasi_iso(c.roof.denom()));
  EXPECT_EQ(s.map(c.denom).to, "P");
  EXPECT_EQ(emit_session(s), out.output);

  // Witness for compose(lift f, lift id) ~ lift f: the flip is already in
  // the session as the composite apex.
  Session w = s;
  const RoofEquivalenceWitness wit = lift_composition_witness(s.map("twoP").map, s.map("idP").map);
  const std::string apex = w.intern_object("W", wit.apex3);
  const std::string d3 = "w_denom", n3 = "w_numer", up = "w_up", down = "w_down";
  w.add_map(d3, apex, "P", wit.denom3);
  w.add_map(n3, apex, "P", wit.numer3);
  w.add_map(up, apex, apex, wit.up);
  w.add_map(down, apex, "P", wit.down);
  const std::string text = emit_session(w);
  const CommandOutcome eq =
      run(text, {"roof-equiv", "compose_lift_twoP_lift_idP", "lift_twoP", "--witness", apex, d3, n3, up, down});
  EXPECT_EQ(eq.exit_code, 0) << eq.diagnostics;
  const CommandOutcome ne =
      run(text, {"roof-equiv", "compose_lift_twoP_lift_idP", "lift_idP", "--witness", apex, d3, n3, up, down});
  EXPECT_EQ(ne.exit_code, 1) << ne.diagnostics;
}

TEST(Commands, InputErrorsExitTwo) {
  EXPECT_EQ(run(kBasic, {}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"qis"}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"qis", "nope"}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"shift", "A", "x"}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"roof-equiv", "a", "b", "--with", "1", "2", "3", "4", "5"}).exit_code, 2);
  EXPECT_EQ(run(kBasic, {"homotopic", "idA", "idP"}).exit_code, 2);
  EXPECT_EQ(run("{", {"validate"}).exit_code, 2);
  const CommandOutcome unknown = run(R"({"field": "Q", "maps": {"f": {"from": "Q", "to": "Q", "components": {}}}})",
                                     {"validate"});
  EXPECT_EQ(unknown.exit_code, 2);
  EXPECT_NE(unknown.diagnostics.find("unknown-reference"), std::string::npos);
  EXPECT_NE(unknown.diagnostics.find("'Q'"), std::string::npos);
}

TEST(Commands, ExitClassesAreDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"validate"},      {"qis", "idP"},       {"qis", "zeroP"},    {"homotopic", "idA", "zeroA"},
      {"les", "twoP"},   {"flip", "twoP", "idP"}, {"cone", "idA"},  {"shift", "P", "-2"},
      {"lift", "idA"},   {"qis", "missing"},   {"cohomology", "A"},
  };
  for (const auto& args : commands) {
    const CommandOutcome a = run(kBasic, args), b = run(kBasic, args);
    EXPECT_EQ(a.exit_code, b.exit_code) << args[0];
    EXPECT_EQ(a.output, b.output) << args[0];
    EXPECT_EQ(a.diagnostics, b.diagnostics) << args[0];
    EXPECT_TRUE(a.exit_code >= 0 && a.exit_code <= 2) << args[0];
    // Verdicts and constructions print to stdout; input errors only to stderr.
    EXPECT_EQ(a.exit_code == 2, a.output.empty()) << args[0];
  }
}

}  // namespace
}  // namespace cochain
