#include "lpa/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/classify.hpp"
#include "lpa/expr.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/graph_json.hpp"
#include "lpa/ideal_json.hpp"
#include "lpa/laws.hpp"

namespace lpa {

namespace {

using nlohmann::json;

struct Common {
  std::optional<std::uint32_t> field_p;
  /// Oracle candidate bound; the law suite's own default when unset.
  std::optional<std::size_t> bound;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Empty until parsed; then json, table or dot.
  std::string format;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field-p", c.field_p, "Prime p of the coefficient field F_p (overrides the graph file)");
  cmd->add_option("--bound", c.bound, "Candidate bound for brute-force enumerations")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for random generation");
  cmd->add_option("--trials", c.trials, "Random trials per graph")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
}

struct Loaded {
  std::string label;
  AlgebraPtr alg;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

/// A path, "-" for stdin, or "fixture:NAME".
Loaded load(const std::string& source, const Common& c, std::istream& in) {
  std::optional<std::uint32_t> p = c.field_p;
  Graph g;
  if (source.rfind("fixture:", 0) == 0) {
    g = fixture(source.substr(8)).graph;
  } else {
    std::string text;
    if (source == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(source);
      if (!file) throw ParseError("cannot open graph file '" + source + "'");
      text = read_all(file);
    }
    auto doc = parse_graph_document(text);
    g = std::move(doc.graph);
    if (!p) p = doc.field_p;
  }
  return {source, make_algebra(std::move(g), FieldSpec(p.value_or(FieldSpec::kDefaultPrime)))};
}

json verdict_json(const PrimalityVerdict& v) {
  json out{{"prime", v.is_prime}, {"case", to_string(v.kind)}};
  if (!v.is_prime) out["witness"] = v.witness;
  return out;
}

int cmd_lattice(const Loaded& l, const Common& c, std::ostream& out) {
  const auto& lattice = l.alg->lattice();
  const auto& g = l.alg->graph();
  std::vector<std::optional<PrimalityVerdict>> verdicts;
  for (const auto& p : lattice.pairs()) {
    const Ideal i = graded_ideal(l.alg, p);
    verdicts.push_back(i.is_proper() ? std::optional(is_prime(i)) : std::nullopt);
  }
  const auto hasse = lattice.hasse_edges();

  if (c.format == "dot") {
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < lattice.pairs().size(); ++k) {
      out << "  p" << k << " [label=\"" << to_string(l.alg, lattice.pairs()[k]) << "\"";
      if (verdicts[k] && verdicts[k]->is_prime) out << ", peripheries=2";
      out << "];\n";
    }
    for (const auto& [lo, hi] : hasse) out << "  p" << lo << " -> p" << hi << ";\n";
    out << "}\n";
  } else if (c.format == "table") {
    for (std::size_t k = 0; k < lattice.pairs().size(); ++k) {
      out << k << "\t" << to_string(l.alg, lattice.pairs()[k]) << "\t";
      out << (!verdicts[k] ? "whole" : verdicts[k]->is_prime ? "prime " + to_string(verdicts[k]->kind) : "-") << "\n";
    }
  } else {
    json pairs = json::array();
    for (std::size_t k = 0; k < lattice.pairs().size(); ++k) {
      json item = pair_to_json(g, lattice.pairs()[k]);
      item["index"] = k;
      if (verdicts[k]) item.update(verdict_json(*verdicts[k]));
      else item["proper"] = false;
      pairs.push_back(item);
    }
    json edges = json::array();
    for (const auto& [lo, hi] : hasse) edges.push_back({lo, hi});
    out << json{{"field", {{"p", l.alg->field().p()}}}, {"pairs", pairs}, {"hasse", edges}}.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_quotient(const Loaded& l, const Common& c, const std::vector<std::string>& h, const std::vector<std::string>& s,
                 std::ostream& out) {
  const auto& g = l.alg->graph();
  const AdmissiblePair pair{g.ids(h), g.ids(s)};
  if (!l.alg->lattice().contains(pair)) throw PreconditionError(to_string(l.alg, pair) + " is not an admissible pair");
  const QuotientGraph q = quotient_graph(g, pair);
  if (c.format == "dot") {
    out << export_dot(q.graph, "quotient");
    return kExitOk;
  }
  std::vector<std::string> primed;
  for (std::size_t k = 0; k < q.primed.size(); ++k)
    if (q.primed[k]) primed.push_back(q.graph.name(static_cast<VertexId>(k)));
  std::vector<std::string> cycles;
  for (const auto& cyc : exitless_cycles(q.graph)) cycles.push_back(cycle_to_string(q.graph, cyc));
  if (c.format == "table") {
    out << "pair\t" << to_string(l.alg, pair) << "\n";
    for (const auto& e : q.graph.edges())
      out << q.graph.name(e.src) << " -> " << q.graph.name(e.dst) << "\t"
          << (e.mult.is_omega() ? std::string("omega") : std::to_string(e.mult.count())) << "\n";
    for (const auto& cyc : cycles) out << "exitless\t" << cyc << "\n";
    return kExitOk;
  }
  json doc = json::parse(render_graph_json(q.graph, l.alg->field().p()));
  doc["primed"] = primed;
  doc["exitless_cycles"] = cycles;
  doc["pair"] = pair_to_json(g, pair);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

void print_ideal(const Ideal& i, const Common& c, std::ostream& out) {
  if (c.format == "table") out << to_string(i) << "\n";
  else out << ideal_to_json(i).dump(2) << "\n";
}

int cmd_eval(const Loaded& l, const Common& c, const std::string& expr, std::ostream& out) {
  const auto value = evaluate_text(l.alg, expr);
  if (const auto* b = std::get_if<bool>(&value)) {
    if (c.format == "table") out << (*b ? "true" : "false") << "\n";
    else out << json{{"result", *b}}.dump(2) << "\n";
  } else {
    print_ideal(std::get<Ideal>(value), c, out);
  }
  return kExitOk;
}

int cmd_classify(const Loaded& l, const Common& c, const std::string& expr, std::ostream& out) {
  const Ideal i = evaluate_ideal(l.alg, expr);
  if (i.is_whole()) throw PreconditionError("classify expects a proper ideal; the expression is the whole ring");
  const auto verdict = is_prime(i);
  const auto pp = prime_power_decomposition(i);
  const Ideal rad = radical(i);
  if (c.format == "table") {
    out << "ideal\t" << to_string(i) << "\n";
    out << "graded\t" << (i.is_graded() ? "true" : "false") << "\n";
    out << "prime\t" << (verdict.is_prime ? "true " + to_string(verdict.kind) : "false (" + verdict.witness + ")") << "\n";
    out << "primary\t" << (is_primary(i) ? "true" : "false") << "\n";
    out << "irreducible\t" << (is_irreducible(i) ? "true" : "false") << "\n";
    if (pp) out << "prime_power\t(" << to_string(pp->first) << ")^" << pp->second << "\n";
    out << "radical\t" << to_string(rad) << "\n";
    return kExitOk;
  }
  json doc{{"ideal", ideal_to_json(i)}, {"graded", i.is_graded()}, {"primary", is_primary(i)},
           {"irreducible", is_irreducible(i)}, {"radical", ideal_to_json(rad)}};
  doc.update(verdict_json(verdict));
  doc["prime_power"] = pp ? json{{"P", ideal_to_json(pp->first)}, {"n", pp->second}} : json(nullptr);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_factor(const Loaded& l, const Common& c, const std::string& expr, std::ostream& out, std::ostream& err) {
  const Ideal i = evaluate_ideal(l.alg, expr);
  const auto result = factor_into_primes(i);
  if (const auto* f = std::get_if<FactorFailure>(&result)) {
    if (c.format == "table") out << "failure\t" << to_string(f->reason) << "\t" << f->details << "\n";
    else out << json{{"input", ideal_to_json(i)}, {"failure", {{"reason", to_string(f->reason)}, {"details", f->details}}}}.dump(2) << "\n";
    err << "error: no prime factorization: " << f->details << "\n";
    return kExitPrecondition;
  }
  const auto& pf = std::get<PrimeFactorization>(result);
  if (c.format == "table") {
    out << "input\t" << to_string(i) << "\n";
    for (const auto& p : pf.factors) out << "factor\t" << to_string(p) << "\n";
    out << "verified\t" << (pf.verified ? "true" : "false") << "\n";
    return kExitOk;
  }
  json factors = json::array();
  for (const auto& p : pf.factors) factors.push_back(ideal_to_json(p));
  out << json{{"input", ideal_to_json(i)}, {"factors", factors}, {"verified", pf.verified}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_solve(const Loaded& l, const Common& c, const std::string& a_text, const std::string& b_text, std::ostream& out) {
  const Ideal a = evaluate_ideal(l.alg, a_text);
  const Ideal b = evaluate_ideal(l.alg, b_text);
  const Ideal sol = solve_quotient(a, b);
  const bool verified = mul(b, sol) == a;
  if (c.format == "table") {
    out << "C\t" << to_string(sol) << "\nverified\t" << (verified ? "true" : "false") << "\n";
  } else {
    out << json{{"A", ideal_to_json(a)}, {"B", ideal_to_json(b)}, {"C", ideal_to_json(sol)}, {"verified", verified}}.dump(2)
        << "\n";
  }
  return verified ? kExitOk : kExitInternal;
}

int cmd_fuzz(const std::optional<std::string>& graph, std::size_t random_graphs, bool use_fixtures, bool self_check,
             const Common& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!graph && random_graphs == 0 && !use_fixtures && !self_check)
    throw CLI::ValidationError("fuzz", "give a graph, --random-graphs N, --fixtures or --self-check");
  LawOptions opts;
  opts.seed = c.seed;
  opts.trials = c.trials;
  if (c.bound) opts.oracle_bound = *c.bound;
  const FieldSpec field(c.field_p.value_or(FieldSpec::kDefaultPrime));

  std::vector<FuzzRun> runs;
  if (self_check) {
    // Corrupt the product into the intersection; the suite must notice.
    opts.mul_override = [](const Ideal& a, const Ideal& b) { return meet(a, b); };
    for (const auto& f : fixtures()) runs.push_back({f.name, f.graph, check_laws(make_algebra(f.graph, field), opts)});
  } else {
    if (graph) {
      Loaded l = load(*graph, c, in);
      runs.push_back({l.label, l.alg->graph(), check_laws(l.alg, opts)});
    }
    if (use_fixtures)
      for (const auto& f : fixtures()) runs.push_back({f.name, f.graph, check_laws(make_algebra(f.graph, field), opts)});
    for (auto& r : fuzz_random_graphs(c.seed, random_graphs, opts, field)) runs.push_back(std::move(r));
  }

  LawReport total;
  json per_graph = json::array();
  for (const auto& r : runs) {
    merge_reports(total, r.report);
    json item = report_to_json(r.report);
    item["graph"] = r.label;
    if (!r.report.ok()) item["graph_document"] = json::parse(render_graph_json(r.graph));
    per_graph.push_back(item);
  }
  if (c.format == "table") {
    for (const auto& l : total.laws)
      out << l.law << "\tpassed " << l.passed << "\tfailed " << l.failed << "\tskipped " << l.skipped << "\n";
    out << (total.ok() ? "ok" : "FAILED") << "\n";
  } else {
    json doc = report_to_json(total);
    doc["self_check"] = self_check;
    doc["runs"] = per_graph;
    out << doc.dump(2) << "\n";
  }
  if (self_check) {
    err << (total.ok() ? "self-check: corrupted product went unnoticed\n" : "self-check: corrupted product detected\n");
    return total.ok() ? kExitOk : kExitInternal;
  }
  if (!total.ok()) err << "error: " << total.failures() << " law violations\n";
  return total.ok() ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideal lattices of Leavitt path algebras over F_p", "lpa"};
  app.require_subcommand(1);

  Common common;
  std::string graph;
  std::optional<std::string> fuzz_graph;
  std::string expr_a;
  std::string expr_b;
  std::vector<std::string> h_names;
  std::vector<std::string> s_names;
  std::size_t random_graphs = 0;
  bool use_fixtures = false;
  bool self_check = false;

  const std::string graph_help = "Graph JSON file, '-' for stdin, or fixture:G1 .. fixture:G7";
  auto* lattice = app.add_subcommand("lattice", "List admissible pairs with primality; Hasse diagram with --format dot");
  lattice->add_option("graph", graph, graph_help)->required();
  add_common(lattice, common);

  auto* quotient = app.add_subcommand("quotient", "Quotient graph E\\(H,S)");
  quotient->add_option("graph", graph, graph_help)->required();
  quotient->add_option("-H,--hereditary", h_names, "Vertices of H")->delimiter(',');
  quotient->add_option("-S,--breaking", s_names, "Vertices of S")->delimiter(',');
  add_common(quotient, common);

  auto* eval = app.add_subcommand("eval", "Evaluate an ideal expression or comparison");
  eval->add_option("graph", graph, graph_help)->required();
  eval->add_option("expr", expr_a, "Expression")->required();
  add_common(eval, common);

  auto* classify = app.add_subcommand("classify", "Prime, primary, irreducible, prime power and radical of an ideal");
  classify->add_option("graph", graph, graph_help)->required();
  classify->add_option("expr", expr_a, "Expression")->required();
  add_common(classify, common);

  auto* factor_cmd = app.add_subcommand("factor", "Factor an ideal into prime ideals");
  factor_cmd->add_option("graph", graph, graph_help)->required();
  factor_cmd->add_option("expr", expr_a, "Expression")->required();
  add_common(factor_cmd, common);

  auto* solve = app.add_subcommand("solve", "Find C with B*C = A for A <= B");
  solve->add_option("graph", graph, graph_help)->required();
  solve->add_option("A", expr_a, "Expression for A")->required();
  solve->add_option("B", expr_b, "Expression for B")->required();
  add_common(solve, common);

  auto* fuzz = app.add_subcommand("fuzz", "Run the law suite on random ideals");
  fuzz->add_option("graph", fuzz_graph, graph_help);
  fuzz->add_option("--random-graphs", random_graphs, "Number of random graphs (at most 8 vertices)");
  fuzz->add_flag("--fixtures", use_fixtures, "Run on every fixture");
  fuzz->add_flag("--self-check", self_check, "Corrupt the product and expect the suite to catch it");
  add_common(fuzz, common);

  auto* dot = app.add_subcommand("export-dot", "Render the graph in DOT");
  dot->add_option("graph", graph, graph_help)->required();
  add_common(dot, common);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (common.format.empty()) common.format = *dot ? "dot" : "json";
  try {
    if (*fuzz) return cmd_fuzz(fuzz_graph, random_graphs, use_fixtures, self_check, common, in, out, err);
    const Loaded l = load(graph, common, in);
    if (*lattice) return cmd_lattice(l, common, out);
    if (*quotient) return cmd_quotient(l, common, h_names, s_names, out);
    if (*eval) return cmd_eval(l, common, expr_a, out);
    if (*classify) return cmd_classify(l, common, expr_a, out);
    if (*factor_cmd) return cmd_factor(l, common, expr_a, out, err);
    if (*solve) return cmd_solve(l, common, expr_a, expr_b, out);
    if (*dot) {
      out << export_dot(l.alg->graph());
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const EnumerationLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace lpa
