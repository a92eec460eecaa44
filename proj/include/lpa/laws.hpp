#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/classify.hpp"

namespace lpa {

using MulFn = std::function<Ideal(const Ideal&, const Ideal&)>;

struct LawOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Candidate bound for the brute-force oracles. Trials beyond it count as
  /// skipped.
  std::size_t oracle_bound = 20'000;
  /// Names of the laws to run; empty runs every law.
  std::set<std::string> only;
  /// Replaces the product under test (mutation testing).
  MulFn mul_override;
  /// Greedy shrink attempts per counterexample.
  std::size_t shrink_steps = 200;
  /// Counterexamples kept per law.
  std::size_t max_counterexamples = 3;
};

struct Counterexample {
  std::vector<Ideal> inputs;
  std::string detail;
};

struct LawResult {
  std::string law;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<Counterexample> counterexamples;
};

struct LawReport {
  std::vector<LawResult> laws;
  std::size_t trials = 0;
  bool ok() const;
  std::size_t failures() const;
};

/// Every law name known to check_laws, in run order.
const std::vector<std::string>& law_names();

/// Runs the law suite on random triples of canonical ideals. Each trial uses
/// split_rng(seed, trial). Failing inputs are shrunk greedily (drop a
/// component, drop an irreducible factor, lower the pair) while the law
/// still fails.
LawReport check_laws(const AlgebraPtr& alg, const LawOptions& opts);

/// Adds the counts and counterexamples of `more` into `into`, law by law.
void merge_reports(LawReport& into, const LawReport& more);

nlohmann::json report_to_json(const LawReport& r);


struct FuzzRun {
  std::string label;
  Graph graph;
  LawReport report;
};

/// check_laws over `graphs` random graphs. Graph k is drawn from
/// split_rng(seed, k), and the same stream then seeds its law trials.
std::vector<FuzzRun> fuzz_random_graphs(std::uint64_t seed, std::size_t graphs, const LawOptions& base,
                                        FieldSpec field = FieldSpec{}, std::size_t max_vertices = 8);

}  // namespace lpa
