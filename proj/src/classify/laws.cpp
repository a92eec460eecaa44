#include "lpa/laws.hpp"

#include <algorithm>
#include <map>

#include "lpa/ideal_json.hpp"
#include "lpa/random.hpp"

namespace lpa {

namespace {

enum class Outcome { Pass, Fail, Skip, NotApplicable };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

using Inputs = std::vector<Ideal>;
using Law = std::function<Verdict(const Inputs&)>;

Verdict pass() { return {Outcome::Pass, {}}; }
Verdict na() { return {Outcome::NotApplicable, {}}; }
Verdict check(bool ok, const std::string& what) { return ok ? pass() : Verdict{Outcome::Fail, what}; }

std::map<std::string, Law> build_laws(const MulFn& mul_fn, std::size_t bound) {
  const EnumerationOptions enum_opts{bound, 0};
  std::map<std::string, Law> laws;
  laws["commutativity"] = [=](const Inputs& in) {
    return check(mul_fn(in[0], in[1]) == mul_fn(in[1], in[0]), "AB != BA");
  };
  laws["associativity"] = [=](const Inputs& in) {
    return check(mul_fn(mul_fn(in[0], in[1]), in[2]) == mul_fn(in[0], mul_fn(in[1], in[2])), "(AB)C != A(BC)");
  };
  laws["distributivity"] = [](const Inputs& in) {
    const auto& [a, b, c] = std::tie(in[0], in[1], in[2]);
    return check(meet(a, add(b, c)) == add(meet(a, b), meet(a, c)), "A&(B+C) != (A&B)+(A&C)");
  };
  laws["product_le_meet"] = [=](const Inputs& in) {
    return check(leq(mul_fn(in[0], in[1]), meet(in[0], in[1])), "AB is not inside A&B");
  };
  laws["graded_product_is_meet"] = [=](const Inputs& in) {
    if (!in[0].is_graded()) return na();
    if (mul_fn(in[0], in[1]) != meet(in[0], in[1])) return Verdict{Outcome::Fail, "A graded but AB != A&B"};
    return check(mul_fn(in[0], in[0]) == in[0], "A graded but A^2 != A");
  };
  laws["non_graded_not_idempotent"] = [=](const Inputs& in) {
    if (in[0].is_graded()) return na();
    return check(mul_fn(in[0], in[0]) != in[0], "A non-graded but A^2 = A");
  };
  laws["lattice_consistency"] = [](const Inputs& in) {
    for (const auto& a : {in[0], meet(in[0], in[1])}) {
      const auto& b = in[1];
      const bool le = leq(a, b);
      if (le != (add(a, b) == b) || le != (meet(a, b) == a))
        return Verdict{Outcome::Fail, "leq, add and meet disagree on " + to_string(a) + " vs " + to_string(b)};
    }
    return pass();
  };
  laws["modular"] = [](const Inputs& in) {
    const Ideal a = meet(in[0], in[2]);
    const auto& [b, c] = std::tie(in[1], in[2]);
    return check(add(a, meet(b, c)) == meet(add(a, b), c), "A<=C but A+(B&C) != (A+B)&C");
  };
  laws["primary_irreducible_oracle"] = [=](const Inputs& in) {
    const auto& a = in[0];
    if (a.is_zero() || a.is_whole()) return na();
    const bool primary = is_primary(a);
    const bool irreducible = is_irreducible(a);
    const bool oracle = irreducible_oracle(a, enum_opts);
    return check(primary == irreducible && irreducible == oracle,
                 "primary=" + std::to_string(primary) + " irreducible=" + std::to_string(irreducible) +
                     " oracle=" + std::to_string(oracle));
  };
  laws["radical"] = [=](const Inputs& in) {
    const auto& a = in[0];
    if (a.is_zero()) return na();
    const Ideal r = radical(a);
    if (r != radical_oracle(a, enum_opts)) return Verdict{Outcome::Fail, "radical differs from the meet of primes above"};
    if (radical(r) != r) return Verdict{Outcome::Fail, "radical is not idempotent"};
    if (!leq(a, r)) return Verdict{Outcome::Fail, "I is not inside its radical"};
    return check(gr(r) == gr(a), "gr(rad I) != gr(I)");
  };
  laws["factor_roundtrip"] = [=](const Inputs& in) {
    const auto& a = in[0];
    if (a.is_whole()) return na();
    const auto result = factor_into_primes(a);
    if (const auto* f = std::get_if<FactorFailure>(&result))
      return Verdict{Outcome::Fail, "factorization failed: " + to_string(f->reason) + ": " + f->details};
    const auto& factors = std::get<PrimeFactorization>(result).factors;
    Ideal product = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) product = mul_fn(product, factors[k]);
    for (const auto& p : factors)
      if (!is_prime(p).is_prime) return Verdict{Outcome::Fail, "factor " + to_string(p) + " is not prime"};
    return check(product == a, "product of prime factors differs from I");
  };
  laws["solve_quotient"] = [=](const Inputs& in) {
    const auto& [a, b] = std::tie(in[0], in[1]);
    for (const auto& [lo, hi] : {std::pair{mul(a, b), b}, std::pair{meet(a, b), a}, std::pair{a, add(a, b)}}) {
      const Ideal c = solve_quotient(lo, hi);
      if (mul_fn(hi, c) != lo) return Verdict{Outcome::Fail, "B*solve_quotient(A,B) != A for A=" + to_string(lo)};
    }
    return pass();
  };
  laws["comaximal"] = [=](const Inputs& in) {
    const auto& [a, b] = std::tie(in[0], in[1]);
    if (!add(a, b).is_whole()) return na();
    return check(mul_fn(a, b) == meet(a, b), "A+B = L but AB != A&B");
  };
  laws["prime_absorbs"] = [=](const Inputs& in) {
    const auto& p = in[0];
    if (!is_prime(p).is_prime) return na();
    const Ideal a = add(p, in[1]);
    if (a == p) return na();
    if (mul_fn(a, p) != p) return Verdict{Outcome::Fail, "P prime, A strictly above P, but AP != P"};
    return check(leq(p, gr(a)), "P prime, A strictly above P, but P is not inside gr(A)");
  };
  return laws;
}

Verdict evaluate(const Law& law, const Inputs& in) {
  try {
    return law(in);
  } catch (const EnumerationLimit&) {
    return {Outcome::Skip, {}};
  } catch (const Error& e) {
    return {Outcome::Fail, std::string("exception: ") + e.what()};
  }
}

/// Simpler variants of x, each a valid canonical ideal.
std::vector<Ideal> shrink_candidates(const Ideal& x) {
  std::vector<Ideal> out;
  const auto& alg = x.algebra_ptr();
  auto attempt = [&](const AdmissiblePair& pair, const ComponentMap& comps) {
    try {
      out.push_back(canonicalize(alg, pair, comps));
    } catch (const Error&) {
    }
  };
  for (const auto& [c, f] : x.components()) {
    ComponentMap fewer = x.components();
    fewer.erase(c);
    attempt(x.pair(), fewer);
    if (f.degree() > 1) {
      for (const auto& fp : factor(f)) {
        ComponentMap smaller = x.components();
        smaller[c] = f / fp.factor;
        attempt(x.pair(), smaller);
      }
    }
  }
  const auto& lattice = alg->lattice();
  const std::size_t here = lattice.index_of(x.pair());
  for (const auto& [lo, hi] : lattice.hasse_edges())
    if (hi == here) attempt(lattice.pairs()[lo], x.components());
  return out;
}

Inputs shrink(const Law& law, Inputs in, std::size_t steps) {
  bool improved = true;
  while (improved && steps > 0) {
    improved = false;
    for (std::size_t k = 0; k < in.size() && !improved; ++k) {
      for (const auto& candidate : shrink_candidates(in[k])) {
        if (steps == 0) break;
        --steps;
        Inputs next = in;
        next[k] = candidate;
        if (evaluate(law, next).outcome == Outcome::Fail) {
          in = std::move(next);
          improved = true;
          break;
        }
      }
    }
  }
  return in;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, law] : build_laws(nullptr, 1)) out.push_back(name);
    return out;
  }();
  return names;
}

bool LawReport::ok() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.failed;
  return n;
}

LawReport check_laws(const AlgebraPtr& alg, const LawOptions& opts) {
  if (opts.trials < 1) throw PreconditionError("check_laws needs at least one trial");
  const MulFn mul_fn = opts.mul_override ? opts.mul_override : MulFn([](const Ideal& a, const Ideal& b) { return mul(a, b); });
  const auto laws = build_laws(mul_fn, opts.oracle_bound);
  for (const auto& name : opts.only)
    if (!laws.contains(name)) throw PreconditionError("unknown law '" + name + "'");

  LawReport report;
  report.trials = opts.trials;
  for (const auto& [name, law] : laws)
    if (opts.only.empty() || opts.only.contains(name)) report.laws.push_back({name, 0, 0, 0, {}});

  for (std::size_t t = 0; t < opts.trials; ++t) {
    Rng rng = split_rng(opts.seed, t);
    const Inputs in{random_ideal(alg, rng), random_ideal(alg, rng), random_ideal(alg, rng)};
    for (auto& result : report.laws) {
      const Law& law = laws.at(result.law);
      const Verdict v = evaluate(law, in);
      switch (v.outcome) {
        case Outcome::Pass: ++result.passed; break;
        case Outcome::Skip: ++result.skipped; break;
        case Outcome::NotApplicable: break;
        case Outcome::Fail:
          ++result.failed;
          if (result.counterexamples.size() < opts.max_counterexamples) {
            Inputs small = shrink(law, in, opts.shrink_steps);
            const Verdict again = evaluate(law, small);
            result.counterexamples.push_back({std::move(small), again.detail.empty() ? v.detail : again.detail});
          }
          break;
      }
    }
  }
  return report;
}

void merge_reports(LawReport& into, const LawReport& more) {
  into.trials += more.trials;
  for (const auto& m : more.laws) {
    auto it = std::find_if(into.laws.begin(), into.laws.end(), [&](const LawResult& r) { return r.law == m.law; });
    if (it == into.laws.end()) {
      into.laws.push_back(m);
      continue;
    }
    it->passed += m.passed;
    it->failed += m.failed;
    it->skipped += m.skipped;
    it->counterexamples.insert(it->counterexamples.end(), m.counterexamples.begin(), m.counterexamples.end());
  }
}

nlohmann::json report_to_json(const LawReport& r) {
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& l : r.laws) {
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : l.counterexamples) {
      nlohmann::json inputs = nlohmann::json::array();
      for (const auto& i : c.inputs) inputs.push_back(ideal_to_json(i));
      cex.push_back({{"inputs", inputs}, {"detail", c.detail}});
    }
    laws.push_back({{"law", l.law}, {"passed", l.passed}, {"failed", l.failed}, {"skipped", l.skipped}, {"counterexamples", cex}});
  }
  return {{"ok", r.ok()}, {"trials", r.trials}, {"failures", r.failures()}, {"laws", laws}};
}


std::vector<FuzzRun> fuzz_random_graphs(std::uint64_t seed, std::size_t graphs, const LawOptions& base, FieldSpec field,
                                        std::size_t max_vertices) {
  std::vector<FuzzRun> out;
  for (std::size_t k = 0; k < graphs; ++k) {
    Rng rng = split_rng(seed, k);
    Graph g = random_graph(rng, max_vertices);
    LawOptions opts = base;
    opts.seed = rng();
    LawReport report = check_laws(make_algebra(g, field), opts);
    out.push_back({"random-" + std::to_string(k), std::move(g), std::move(report)});
  }
  return out;
}

}  // namespace lpa
