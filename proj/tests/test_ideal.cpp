#include <doctest.h>

#include "lpa/expr.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/ideal.hpp"
#include "lpa/ideal_json.hpp"
#include "lpa/random.hpp"

using namespace lpa;

namespace {

AlgebraPtr alg_of(const std::string& name) { return make_algebra(fixture(name).graph); }

Cycle cyc(const AlgebraPtr& a, std::vector<std::string> chain) { return Cycle::from_names(a->graph(), chain); }

FieldPoly P(const AlgebraPtr& a, const char* text) { return parse_poly(text, a->field()); }

Ideal E(const AlgebraPtr& a, const char* text) { return evaluate_ideal(a, text); }

AdmissiblePair pr(const AlgebraPtr& a, std::vector<std::string> h, std::vector<std::string> s = {}) {
  return {a->graph().ids(h), a->graph().ids(s)};
}

/// On a single loop every nonzero ideal is <f> for a Laurent polynomial f;
/// the whole ring is f = 1 and the zero ideal f = 0.
FieldPoly loop_model(const Ideal& i) {
  if (i.is_whole()) return FieldPoly::constant(i.algebra().field(), 1);
  if (i.is_zero()) return FieldPoly(i.algebra().field());
  REQUIRE(i.components().size() == 1);
  return i.components().begin()->second;
}

}  // namespace

TEST_CASE("canonicalize") {
  const auto g1 = alg_of("G1");
  const Cycle c = cyc(g1, {"v"});
  const Ideal a = canonicalize(g1, {}, {{c, P(g1, "3x^3+3x^2")}});
  CHECK(a.pair() == AdmissiblePair{});
  CHECK(a.components().at(c) == P(g1, "x+1"));
  CHECK(canonicalize(g1, {}, {{c, P(g1, "x")}}).is_whole());
  CHECK(canonicalize(g1, {}, {{c, P(g1, "0")}}).is_zero());

  const auto g2 = alg_of("G2");
  CHECK_THROWS_AS(canonicalize(g2, {}, {{cyc(g2, {"u"}), P(g2, "x+1")}}), PreconditionError);
  CHECK_THROWS_AS(canonicalize(g2, pr(g2, {"u"}), {}), ValidationError);
  // Once v is in the ideal the loop at u has no exit.
  CHECK_NOTHROW(canonicalize(g2, pr(g2, {"v"}), {{cyc(g2, {"u"}), P(g2, "x+1")}}));
}

TEST_CASE("canonicalize: a unit component absorbs the cycle and can expose others") {
  // On G3 the loops at v1, v2 only lose their exits once v is in the ideal.
  const auto g3 = alg_of("G3");
  const Ideal a = canonicalize(g3, pr(g3, {"v"}), {{cyc(g3, {"v1"}), P(g3, "x^3")}, {cyc(g3, {"v2"}), P(g3, "x+1")}});
  CHECK(a.pair() == pr(g3, {"v", "v1"}));
  CHECK(a.components().size() == 1);
  CHECK(a.components().at(cyc(g3, {"v2"})) == P(g3, "x+1"));
}

TEST_CASE("gr and is_graded") {
  const auto g3 = alg_of("G3");
  const Ideal a = canonicalize(g3, pr(g3, {"v"}), {{cyc(g3, {"v1"}), P(g3, "x+1")}});
  CHECK(gr(a) == graded_ideal(g3, pr(g3, {"v"})));
  CHECK_FALSE(a.is_graded());
  CHECK(gr(gr(a)) == gr(a));
  CHECK(gr(whole_ideal(g3)) == whole_ideal(g3));
  CHECK(zero_ideal(g3).is_graded());
  CHECK(whole_ideal(g3).is_graded());
  const auto g1 = alg_of("G1");
  CHECK_FALSE(E(g1, "comp(v; x+1)").is_graded());
}

TEST_CASE("leq") {
  const auto g1 = alg_of("G1");
  CHECK(leq(E(g1, "comp(v; (x+1)^2)"), E(g1, "comp(v; x+1)")));
  CHECK_FALSE(leq(E(g1, "comp(v; x+1)"), E(g1, "comp(v; x+2)")));
  const Ideal a = E(g1, "comp(v; x^2+4)");
  CHECK(leq(a, a));
  CHECK(leq(zero_ideal(g1), a));
  CHECK(leq(a, whole_ideal(g1)));
}

TEST_CASE("add") {
  const auto g1 = alg_of("G1");
  CHECK((E(g1, "comp(v; x+1)") + E(g1, "comp(v; x+2)")).is_whole());
  CHECK(E(g1, "comp(v; (x+1)^2)") + E(g1, "comp(v; (x+1)(x+2))") == E(g1, "comp(v; x+1)"));
  const Ideal a = E(g1, "comp(v; x^3+2)");
  CHECK(a + a == a);
}

TEST_CASE("mul and meet") {
  const auto g1 = alg_of("G1");
  CHECK(E(g1, "comp(v; x+1)") * E(g1, "comp(v; x+2)") == E(g1, "comp(v; x^2+3x+2)"));
  CHECK((E(g1, "comp(v; x+1)") & E(g1, "comp(v; x+2)")) == E(g1, "comp(v; x^2+3x+2)"));
  const auto g6 = alg_of("G6");
  for (const char* f : {"x+1", "x^2+2", "(x+3)^4"}) {
    const Ideal c = cycle_ideal(g6, cyc(g6, {"a"}), P(g6, f));
    CHECK((graded_ideal(g6, pr(g6, {"h"})) * c).is_zero());
    CHECK((graded_ideal(g6, pr(g6, {"h"})) & c).is_zero());
  }
  const Ideal a = E(g1, "comp(v; x+4)");
  CHECK((a & whole_ideal(g1)) == a);
  CHECK(a * whole_ideal(g1) == a);
  CHECK((a * zero_ideal(g1)).is_zero());
}

TEST_CASE("equals") {
  const auto g1 = alg_of("G1");
  const Ideal a = E(g1, "comp(v; x+1)");
  CHECK(equals(a, a));
  CHECK(equals(a, E(g1, "comp(v; 2x+2)")));
  CHECK_FALSE(equals(a, E(g1, "comp(v; (x+1)^2)")));
}

TEST_CASE("radical") {
  const auto g1 = alg_of("G1");
  CHECK(radical(E(g1, "comp(v; (x+1)^2(x+2))")) == E(g1, "comp(v; x^2+3x+2)"));
  CHECK(radical(E(g1, "comp(v; (x+1)^3)")) == E(g1, "comp(v; x+1)"));
  for (const auto& f : fixtures()) {
    const auto a = make_algebra(f.graph);
    for (const auto& p : a->lattice().pairs()) CHECK(radical(graded_ideal(a, p)) == graded_ideal(a, p));
  }
}

TEST_CASE("power") {
  const auto g1 = alg_of("G1");
  CHECK(power(E(g1, "comp(v; x+1)"), 3) == E(g1, "comp(v; (x+1)^3)"));
  CHECK(power(E(g1, "0"), 2).is_zero());
  CHECK_THROWS_AS(power(E(g1, "0"), 0), PreconditionError);
}

TEST_CASE("arithmetic on a single loop matches the Laurent polynomial model") {
  const auto g1 = alg_of("G1");
  Rng rng = split_rng(31, 0);
  for (int k = 0; k < 300; ++k) {
    const Ideal a = random_ideal(g1, rng);
    const Ideal b = random_ideal(g1, rng);
    const FieldPoly f = loop_model(a);
    const FieldPoly g = loop_model(b);
    const FieldPoly zero(g1->field());
    auto as_ideal = [&](const FieldPoly& h) {
      if (h.is_zero()) return zero_ideal(g1);
      return canonicalize(g1, {}, {{cyc(g1, {"v"}), h}});
    };
    REQUIRE(a * b == as_ideal(f * g));
    if (f.is_zero() || g.is_zero()) {
      REQUIRE((a & b).is_zero());
      REQUIRE(a + b == as_ideal(f.is_zero() ? g : f));
    } else {
      REQUIRE((a & b) == as_ideal(lcm(f, g)));
      REQUIRE(a + b == as_ideal(gcd(f, g)));
    }
    REQUIRE(leq(a, b) == (g.is_zero() ? f.is_zero() : f.is_zero() || divides(g, f)));
  }
}

TEST_CASE("results of every operation are canonical") {
  for (const auto& f : fixtures()) {
    const auto a = make_algebra(f.graph);
    for (std::uint64_t k = 0; k < 100; ++k) {
      Rng rng = split_rng(32, k);
      const Ideal x = random_ideal(a, rng);
      const Ideal y = random_ideal(a, rng);
      for (const auto& op : {"add", "mul", "meet"}) {
        const auto report = run_op(op, x, y);
        REQUIRE(report.all_checks_pass());
      }
      for (const Ideal& r : {gr(x), radical(x), power(x, 2)})
        REQUIRE(canonicalize(a, r.pair(), r.components()) == r);
    }
  }
}

TEST_CASE("order, sum and meet are consistent") {
  for (const auto& f : fixtures()) {
    const auto a = make_algebra(f.graph);
    for (std::uint64_t k = 0; k < 100; ++k) {
      Rng rng = split_rng(33, k);
      const Ideal x = random_ideal(a, rng);
      const Ideal y = random_ideal(a, rng);
      REQUIRE(leq(x, x + y));
      REQUIRE(leq(y, x + y));
      REQUIRE(leq(x & y, x));
      REQUIRE(leq(x * y, x & y));
      REQUIRE(leq(x, y) == ((x & y) == x));
      REQUIRE(leq(x, y) == (x + y == y));
      REQUIRE(leq(gr(x), x));
      if (leq(x, y) && leq(y, x)) REQUIRE(x == y);
    }
  }
}

TEST_CASE("ideal JSON round trip") {
  for (const auto& f : fixtures()) {
    const auto a = make_algebra(f.graph);
    for (std::uint64_t k = 0; k < 50; ++k) {
      Rng rng = split_rng(34, k);
      const Ideal x = random_ideal(a, rng);
      REQUIRE(parse_ideal_json(a, ideal_to_json(x).dump()) == x);
    }
  }
  const auto g1 = alg_of("G1");
  CHECK(ideal_to_json(E(g1, "comp(v; x+1)")) ==
        nlohmann::json::parse(R"({"H":[],"S":[],"components":[{"cycle":["v"],"poly":"x+1"}]})"));
  CHECK_THROWS_AS(parse_ideal_json(g1, R"({"H":["q"],"S":[],"components":[]})"), ValidationError);
}

TEST_CASE("to_string") {
  const auto g3 = alg_of("G3");
  const Ideal a = canonicalize(g3, pr(g3, {"v"}), {{cyc(g3, {"v1"}), P(g3, "x+1")}});
  CHECK(to_string(a) == "I({v},{}) + <x+1>(v1)");
  CHECK(to_string(zero_ideal(g3)) == "I({},{})");
}

TEST_CASE("ideals of different algebras cannot be mixed") {
  const auto x = alg_of("G1");
  const auto y = alg_of("G1");
  CHECK_THROWS_AS((void)(zero_ideal(x) == zero_ideal(y)), PreconditionError);
  CHECK_THROWS_AS(add(zero_ideal(x), zero_ideal(y)), PreconditionError);
}
