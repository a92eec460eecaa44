#include <doctest.h>

#include "lpa/fixtures.hpp"
#include "lpa/laws.hpp"
#include "lpa/random.hpp"

using namespace lpa;

namespace {

AlgebraPtr alg_of(const std::string& name) { return make_algebra(fixture(name).graph); }

std::string summary(const LawReport& r) { return report_to_json(r).dump(); }

}  // namespace

TEST_CASE("law suite passes on G3 with seed 1") {
  LawOptions opts;
  opts.seed = 1;
  opts.trials = 100;
  const auto r = check_laws(alg_of("G3"), opts);
  INFO(summary(r));
  CHECK(r.ok());
  CHECK(r.laws.size() == law_names().size());
  for (const auto& l : r.laws) CHECK(l.skipped == 0);
}

TEST_CASE("law suite passes on G1 with seed 7") {
  LawOptions opts;
  opts.seed = 7;
  opts.trials = 100;
  const auto r = check_laws(alg_of("G1"), opts);
  INFO(summary(r));
  CHECK(r.ok());
}

TEST_CASE("law suite passes on every fixture") {
  for (const auto& f : fixtures()) {
    LawOptions opts;
    opts.seed = 2;
    opts.trials = 60;
    const auto r = check_laws(make_algebra(f.graph), opts);
    INFO(f.name << " " << summary(r));
    CHECK(r.ok());
  }
}

TEST_CASE("law suite passes over F_2 and F_3") {
  for (std::uint32_t p : {2U, 3U}) {
    LawOptions opts;
    opts.seed = 3;
    opts.trials = 40;
    for (const auto& f : fixtures()) {
      const auto r = check_laws(make_algebra(f.graph, FieldSpec(p)), opts);
      INFO(f.name << " p=" << p << " " << summary(r));
      CHECK(r.ok());
    }
  }
}

TEST_CASE("a corrupted product is caught and shrunk") {
  LawOptions opts;
  opts.seed = 1;
  opts.trials = 50;
  opts.mul_override = [](const Ideal& a, const Ideal& b) { return meet(a, b); };
  const auto r = check_laws(alg_of("G1"), opts);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& l : r.laws) {
    if (l.law != "non_graded_not_idempotent") continue;
    REQUIRE(l.failed > 0);
    REQUIRE_FALSE(l.counterexamples.empty());
    const auto& cex = l.counterexamples.front();
    // Shrinking ends at a single irreducible factor on the loop.
    CHECK(cex.inputs[0].components().size() == 1);
    CHECK(is_irreducible(cex.inputs[0].components().begin()->second));
    found = true;
  }
  CHECK(found);
}

TEST_CASE("a product that loses its components is caught") {
  LawOptions opts;
  opts.seed = 4;
  opts.trials = 50;
  opts.mul_override = [](const Ideal& a, const Ideal& b) { return gr(mul(a, b)); };
  CHECK_FALSE(check_laws(alg_of("G3"), opts).ok());
}

TEST_CASE("reports are deterministic and mergeable") {
  LawOptions opts;
  opts.seed = 9;
  opts.trials = 20;
  opts.only = {"commutativity", "radical"};
  const auto a = check_laws(alg_of("G7"), opts);
  const auto b = check_laws(alg_of("G7"), opts);
  CHECK(summary(a) == summary(b));
  CHECK(a.laws.size() == 2);
  LawReport total = a;
  merge_reports(total, b);
  CHECK(total.trials == 40);
  CHECK(total.laws[0].passed == 2 * a.laws[0].passed);
  opts.only = {"nonsense"};
  CHECK_THROWS_AS(check_laws(alg_of("G7"), opts), PreconditionError);
}

TEST_CASE("tiny oracle bound downgrades to skipped, never to passed") {
  LawOptions opts;
  opts.seed = 5;
  opts.trials = 30;
  opts.oracle_bound = 1;
  opts.only = {"primary_irreducible_oracle"};
  const auto r = check_laws(alg_of("G3"), opts);
  CHECK(r.ok());
  CHECK(r.laws[0].skipped > 0);
  CHECK(r.laws[0].passed == 0);
}

TEST_CASE("random graph fuzzing is reproducible") {
  LawOptions opts;
  opts.trials = 5;
  const auto a = fuzz_random_graphs(42, 4, opts);
  const auto b = fuzz_random_graphs(42, 4, opts);
  REQUIRE(a.size() == 4);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].graph == b[k].graph);
    CHECK(summary(a[k].report) == summary(b[k].report));
    CHECK(a[k].report.ok());
  }
}

TEST_CASE("every law holds on random graphs") {
  LawOptions opts;
  opts.trials = 30;
  for (const auto& run : fuzz_random_graphs(2024, 300, opts)) {
    INFO(run.label << " " << summary(run.report));
    CHECK(run.report.ok());
  }
}
