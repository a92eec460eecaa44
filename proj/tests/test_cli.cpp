#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "lpa/cli.hpp"
#include "lpa/expr.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/graph_json.hpp"
#include "lpa/ideal_json.hpp"

using namespace lpa;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "lpa");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

AlgebraPtr alg_of(const std::string& name) { return make_algebra(fixture(name).graph); }

}  // namespace

TEST_CASE("expression precedence and comparisons") {
  const auto g1 = alg_of("G1");
  const Ideal a = evaluate_ideal(g1, "comp(v; x+1) + comp(v; x+2) * comp(v; x+3)");
  CHECK(a.is_whole());
  CHECK(evaluate_ideal(g1, "(comp(v; x+1) + comp(v; x+2)) * comp(v; x+3)") == evaluate_ideal(g1, "comp(v; x+3)"));
  CHECK(evaluate_ideal(g1, "comp(v; x+1) * comp(v; x+2) & comp(v; x+1)") == evaluate_ideal(g1, "comp(v; (x+1)^2(x+2))"));
  CHECK(std::get<bool>(evaluate_text(g1, "comp(v; (x+1)^2) <= comp(v; x+1)")));
  CHECK_FALSE(std::get<bool>(evaluate_text(g1, "comp(v; x+1) <= comp(v; x+2)")));
  CHECK(std::get<bool>(evaluate_text(g1, "comp(c: v; x+1) == comp(v; 2x+2)")));
  CHECK(evaluate_ideal(g1, "gr(comp(c: v; x+1))").is_zero());
  CHECK(evaluate_ideal(g1, "rad(comp(v; (x+1)^3))") == evaluate_ideal(g1, "comp(v; x+1)"));
  CHECK(evaluate_ideal(g1, "L").is_whole());
  CHECK(evaluate_ideal(g1, "0").is_zero());
}

TEST_CASE("expression atoms on graded fixtures") {
  const auto g3 = alg_of("G3");
  CHECK(evaluate_ideal(g3, "gen(v1) & gen(v2)") == evaluate_ideal(g3, "I(v;)"));
  CHECK(evaluate_ideal(g3, "gen(v1, v2)").is_whole());
  const Ideal mixed = evaluate_ideal(g3, "gen(v) + comp(v1; x+1)");
  CHECK(mixed.components().size() == 1);
  const auto g4 = alg_of("G4");
  CHECK(evaluate_ideal(g4, "I(h; w)").pair().S == g4->graph().ids({"w"}));
  CHECK_THROWS_AS(evaluate_ideal(g4, "I(; w)"), PreconditionError);
  const auto g7 = alg_of("G7");
  CHECK_FALSE(evaluate_ideal(g7, "I(h; u, w) + comp(t>u; x+1)").is_graded());
  CHECK(evaluate_ideal(g7, "I(h; u, w) + comp(u>t; x+1)") == evaluate_ideal(g7, "I(h; u, w) + comp(t>u; x+1)"));
}

TEST_CASE("expression errors") {
  const auto g1 = alg_of("G1");
  try {
    evaluate_ideal(g1, "comp(c: v; x+1) * (");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 20);
  }
  try {
    evaluate_ideal(g1, "comp(v; x+^2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 9);
    CHECK(std::string(e.what()).find("column") == std::string(e.what()).rfind("column"));
  }
  CHECK_THROWS_AS(evaluate_ideal(g1, "gen(q)"), ParseError);
  CHECK_THROWS_AS(evaluate_ideal(g1, "comp(v>v; x+1)"), ParseError);
  CHECK_THROWS_AS(evaluate_ideal(g1, "L <= L"), ParseError);
  CHECK_THROWS_AS(evaluate_ideal(g1, "L L"), ParseError);
  CHECK_THROWS_AS(evaluate_ideal(alg_of("G2"), "comp(u; x+1)"), PreconditionError);
}

TEST_CASE("evaluation is referentially transparent") {
  const auto g3 = alg_of("G3");
  for (const char* e : {"gen(v) * gen(v1)", "gen(v) + comp(v2; x^2+2)", "rad(gen(v) + comp(v1; (x+1)^2))"})
    CHECK(evaluate_ideal(g3, e) == evaluate_ideal(g3, e));
}

TEST_CASE("cli: eval") {
  const Run r = cli({"eval", "fixture:G1", "comp(c: v; x+1) * comp(c: v; x+2)"});
  CHECK(r.code == 0);
  CHECK(r.doc()["components"][0]["poly"] == "x^2+3x+2");
  const Run meet = cli({"eval", "fixture:G3", "gen(v1) & gen(v2)"});
  CHECK(meet.doc() == json::parse(R"({"H":["v"],"S":[],"components":[]})"));
  const Run cmp = cli({"eval", "fixture:G1", "comp(v; x+1) <= L"});
  CHECK(cmp.doc()["result"] == true);
  CHECK(cli({"eval", "fixture:G1", "gr(comp(c: v; x+1))", "--format", "table"}).out == "I({},{})\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"eval", "fixture:G1", "comp(v; x+1) * ("}).code == kExitUsage);
  CHECK(cli({"eval", "fixture:G9", "L"}).code == kExitUsage);
  CHECK(cli({"eval", "/nonexistent/graph.json", "L"}).code == kExitUsage);
  CHECK(cli({"eval", "fixture:G1", "L", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"eval", "fixture:G1", "L", "--field-p", "6"}).code == kExitUsage);
  CHECK(cli({"eval", "fixture:G2", "comp(u; x+1)"}).code == kExitPrecondition);
  CHECK(cli({"classify", "fixture:G1", "L"}).code == kExitPrecondition);
  CHECK(cli({"solve", "fixture:G1", "comp(v; x+1)", "comp(v; x+2)"}).code == kExitPrecondition);
  CHECK(cli({"fuzz", "--self-check", "--trials", "20"}).code == kExitInternal);
}

TEST_CASE("cli: graph from stdin and field override") {
  const std::string doc = R"({"field":{"p":3},"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":1}]})";
  const Run r = cli({"eval", "-", "comp(v; x+4)", "--format", "table"}, doc);
  CHECK(r.out == "I({},{}) + <x+1>(v)\n");
  const Run o = cli({"eval", "-", "comp(v; x+4)", "--format", "table", "--field-p", "7"}, doc);
  CHECK(o.out == "I({},{}) + <x+4>(v)\n");
}

TEST_CASE("cli: lattice") {
  const Run g1 = cli({"lattice", "fixture:G1"});
  REQUIRE(g1.code == 0);
  const json d = g1.doc();
  REQUIRE(d["pairs"].size() == 2);
  CHECK(d["pairs"][0]["prime"] == true);
  CHECK(d["pairs"][0]["case"] == "graded-i");
  CHECK(d["pairs"][1]["proper"] == false);
  CHECK_FALSE(d["pairs"][1].contains("prime"));

  const json g4 = cli({"lattice", "fixture:G4"}).doc();
  std::set<json> pairs;
  for (const auto& p : g4["pairs"]) pairs.insert(json{{"H", p["H"]}, {"S", p["S"]}});
  CHECK(pairs.contains(json::parse(R"({"H":["h"],"S":[]})")));
  CHECK(pairs.contains(json::parse(R"({"H":["h"],"S":["w"]})")));

  const Run dot = cli({"lattice", "fixture:G3", "--format", "dot"});
  CHECK(dot.out.find("digraph lattice") == 0);
  CHECK(dot.out.find("peripheries=2") != std::string::npos);

  std::string big = R"({"vertices":[)";
  for (int k = 0; k < 16; ++k) big += (k ? ",\"" : "\"") + std::string("n") + std::to_string(k) + "\"";
  big += R"(],"edges":[]})";
  const Run guard = cli({"lattice", "-"}, big);
  CHECK(guard.code == kExitPrecondition);
  CHECK_FALSE(guard.err.empty());
}

TEST_CASE("cli: quotient") {
  const Run r = cli({"quotient", "fixture:G4", "-H", "h"});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["primed"] == json::array({"w'"}));
  CHECK(parse_graph(r.out).vertex_count() == 3);
  CHECK(cli({"quotient", "fixture:G4", "-H", "w"}).code == kExitPrecondition);
  const json g2 = cli({"quotient", "fixture:G2", "-H", "v"}).doc();
  CHECK(g2["exitless_cycles"] == json::array({"(u)"}));
}

TEST_CASE("cli: classify") {
  const json c = cli({"classify", "fixture:G1", "comp(c: v; (x+1)^2)"}).doc();
  CHECK(c["primary"] == true);
  CHECK(c["irreducible"] == true);
  CHECK(c["prime"] == false);
  CHECK(c["prime_power"]["n"] == 2);
  CHECK(c["prime_power"]["P"]["components"][0]["poly"] == "x+1");
  const json g3 = cli({"classify", "fixture:G3", "gen(v)"}).doc();
  CHECK(g3["prime"] == false);
  CHECK(g3["primary"] == false);
  const json zero = cli({"classify", "fixture:G1", "0"}).doc();
  CHECK(zero["prime"] == true);
  CHECK(zero["case"] == "graded-i");
}

TEST_CASE("cli: factor") {
  const Run g3 = cli({"factor", "fixture:G3", "gen(v)"});
  REQUIRE(g3.code == 0);
  const json d = g3.doc();
  CHECK(d["verified"] == true);
  CHECK(d["factors"] == json::parse(R"([{"H":["v","v1"],"S":[],"components":[]},{"H":["v","v2"],"S":[],"components":[]}])"));
  const json g1 = cli({"factor", "fixture:G1", "comp(c: v; (x+1)^2(x+2))"}).doc();
  std::vector<std::string> polys;
  for (const auto& f : g1["factors"]) polys.push_back(f["components"][0]["poly"]);
  CHECK(polys == std::vector<std::string>{"x+1", "x+1", "x+2"});
  CHECK(cli({"factor", "fixture:G1", "comp(v; x+1)"}).doc()["factors"].size() == 1);
  CHECK(cli({"factor", "fixture:G1", "L"}).code == kExitPrecondition);
}

TEST_CASE("cli: solve") {
  const json d = cli({"solve", "fixture:G1", "comp(v; (x+1)^2)", "comp(v; x+1)"}).doc();
  CHECK(d["verified"] == true);
  CHECK(d["C"]["components"][0]["poly"] == "x+1");
  const json same = cli({"solve", "fixture:G1", "comp(v; x+3)", "comp(v; x+3)"}).doc();
  CHECK(same["C"]["H"] == json::array({"v"}));
}

TEST_CASE("cli: JSON outputs round-trip through the ideal schema") {
  const auto g7 = alg_of("G7");
  for (const char* e : {"I(h; u, w) + comp(t>u; (x+1)^2)", "gen(t)", "0", "I(h; w)"}) {
    const Run r = cli({"eval", "fixture:G7", e});
    REQUIRE(r.code == 0);
    CHECK(parse_ideal_json(g7, r.out) == evaluate_ideal(g7, e));
  }
}

TEST_CASE("cli: fuzz") {
  const Run r = cli({"fuzz", "fixture:G3", "--seed", "1", "--trials", "30"});
  CHECK(r.code == 0);
  CHECK(r.doc()["ok"] == true);
  const Run rg = cli({"fuzz", "--random-graphs", "3", "--seed", "42", "--trials", "10", "--format", "table"});
  CHECK(rg.code == 0);
  CHECK(rg.out.find("ok\n") != std::string::npos);
  CHECK(cli({"fuzz"}).code == kExitUsage);
}

TEST_CASE("cli: export-dot") {
  const Run r = cli({"export-dot", "fixture:G4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("ω") != std::string::npos);
}
