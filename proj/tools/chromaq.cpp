// Copyright 2026 chromaq contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chromaq/chromaq.hpp"
#include "chromaq/serialize.hpp"

namespace {

using namespace chromaq;

struct Limits {
  int brute = limits::kBruteForceVertices;
  int forest = limits::kForestTripleVertices;
  int llt = limits::kLltEdges;
};

Limits effective_limits() {
  Limits l;
  const char* env = std::getenv("CHROMAQ_LIMIT_OVERRIDE");
  if (env && std::string(env) == "1") {
    l.brute = 16;
    l.forest = 16;
    l.llt = 30;
  }
  return l;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    out.push_back(std::stoi(item, &pos));
    if (pos != item.size())
      throw std::invalid_argument(std::string(what) + ": bad entry '" + item +
                                  "'");
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

struct GraphInput {
  std::optional<Nuig> nuig;          // present when the graph is an NUIG
  std::optional<GenericGraph> any;   // always present
  std::optional<KChainSpec> kchain;  // present for --family kchain
  std::string description;
};

struct ComputeArgs {
  std::string family;
  int n = 0;
  std::string gamma;
  std::string epsilon;
  std::string b_seq;
  std::string edges_path;
  std::string method = "all";
  std::string order = "lex";
  std::string format = "text";
};

GraphInput load_graph(const ComputeArgs& args) {
  GraphInput in;
  int sources = (!args.family.empty() ? 1 : 0) + (!args.b_seq.empty() ? 1 : 0) +
                (!args.edges_path.empty() ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument(
        "specify exactly one graph source: --family, --b, or --edges");

  if (!args.family.empty()) {
    if (args.family == "kchain") {
      std::vector<int> gamma = parse_int_list(args.gamma, "--gamma");
      std::vector<int> eps =
          args.epsilon.empty()
              ? std::vector<int>(gamma.size(), 0)
              : parse_int_list(args.epsilon, "--epsilon");
      in.kchain = KChainSpec(gamma, eps);
      in.nuig = make_kchain(*in.kchain);
      in.description = "kchain gamma=" + args.gamma;
    } else {
      if (args.n < 1)
        throw std::invalid_argument("--n is required for this family");
      if (args.family == "path")
        in.nuig = make_path(args.n);
      else if (args.family == "complete")
        in.nuig = make_complete(args.n);
      else if (args.family == "almostcomplete")
        in.nuig = make_almost_complete(args.n);
      else if (args.family == "ladder")
        in.nuig = make_triangular_ladder(args.n);
      else
        throw std::invalid_argument("unknown family '" + args.family + "'");
      in.description = args.family + " n=" + std::to_string(args.n);
    }
  } else if (!args.b_seq.empty()) {
    in.nuig = parse_b_sequence(args.b_seq);
    in.description = "b=" + args.b_seq;
  } else {
    std::ifstream file(args.edges_path);
    if (!file)
      throw std::invalid_argument("cannot open edge list '" + args.edges_path +
                                  "'");
    GenericGraph g = read_edge_list(file);
    in.any = g;
    in.description = "edges " + args.edges_path;
    try {
      in.nuig = Nuig::from_graph(g);
    } catch (const std::invalid_argument&) {
      // Not an NUIG; only the q=1 route applies.
    }
  }
  if (!in.any && in.nuig) in.any = in.nuig->to_generic();
  return in;
}

EdgeOrder make_order(const GenericGraph& g, const std::string& order) {
  if (order == "lex") return EdgeOrder::lex(g);
  if (order.rfind("random:", 0) == 0)
    return EdgeOrder::shuffled(g, std::stoull(order.substr(7)));
  throw std::invalid_argument("--order must be lex or random:<seed>");
}

int run_compute(const ComputeArgs& args) {
  Limits lim = effective_limits();
  GraphInput in = load_graph(args);

  std::vector<std::pair<std::string, ESym>> results;
  auto want = [&](const std::string& m) {
    return args.method == m || args.method == "all";
  };

  if (want("brute")) {
    if (in.nuig) {
      if (args.method == "brute" || in.nuig->n() <= lim.brute)
        results.emplace_back("brute", x_brute_force(*in.nuig, lim.brute));
    } else if (args.method == "brute") {
      throw std::invalid_argument("method brute requires an NUIG input");
    }
  }
  if (want("forest")) {
    if (in.nuig) {
      if (args.method == "forest" || in.nuig->n() <= lim.forest)
        results.emplace_back("forest", x_forest_triples(*in.nuig, lim.forest));
    } else if (args.method == "forest") {
      throw std::invalid_argument("method forest requires an NUIG input");
    }
  }
  if (want("llt")) {
    if (in.nuig) {
      if (args.method == "llt" || in.nuig->edge_count() <= lim.llt)
        results.emplace_back("llt", x_from_llt(*in.nuig, lim.llt));
    } else if (args.method == "llt") {
      throw std::invalid_argument("method llt requires an NUIG input");
    }
  }
  if (want("kchain")) {
    if (in.kchain) {
      results.emplace_back("kchain", kchain_explicit_formula(*in.kchain));
    } else if (args.method == "kchain") {
      throw std::invalid_argument(
          "method kchain requires --family kchain with --gamma");
    }
  }
  if (want("twoclique")) {
    bool applicable = in.kchain && in.kchain->length() == 2 &&
                      in.kchain->epsilon[0] == 0 && in.kchain->epsilon[1] == 0;
    if (applicable) {
      results.emplace_back(
          "twoclique",
          two_clique_formula(in.kchain->gamma[0], in.kchain->gamma[1]));
    } else if (args.method == "twoclique") {
      throw std::invalid_argument(
          "method twoclique requires --family kchain --gamma a,b with "
          "epsilon 0,0");
    }
  }
  // The q=1 route participates in --method all only when no q-method
  // applies (its value is not comparable to the q-expansions).
  if (args.method == "nbc" || (args.method == "all" && results.empty())) {
    EdgeOrder ord = make_order(*in.any, args.order);
    results.emplace_back("nbc", nbc_e_expansion(*in.any, ord, lim.forest));
  }

  if (results.empty())
    throw std::invalid_argument("no applicable method for this input");

  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].second != results[0].second) agree = false;

  if (args.format == "json") {
    Json out;
    out["graph"] = in.nuig ? to_json(*in.nuig) : to_json(*in.any);
    Json methods = Json::object();
    for (const auto& [name, x] : results) methods[name] = to_json(x);
    out["methods"] = std::move(methods);
    if (results.size() > 1) out["agree"] = agree;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "graph: " << in.description << "\n";
    for (const auto& [name, x] : results)
      std::cout << name << ": " << x.to_string() << "\n";
    if (results.size() > 1)
      std::cout << (agree ? "all methods agree" : "METHOD MISMATCH") << "\n";
  }
  if (!agree) {
    std::cerr << "error: methods disagree on " << in.description << "\n";
    return exit_codes::kInvariantViolation;
  }
  return exit_codes::kOk;
}

int run_scan(int n, int jobs, const std::string& format) {
  ScanReport report = scan_nuigs(n, jobs);
  if (format == "json") {
    Json out;
    out["n"] = report.n;
    out["graphs"] = Json::array();
    for (const auto& r : report.graphs) {
      Json g;
      g["b"] = r.b;
      g["edges"] = r.edge_count;
      g["method"] = r.method;
      g["e_positive"] = r.e_positive;
      g["palindromic"] = r.palindromic;
      g["e_unimodal"] = r.e_unimodal;
      g["e_log_concave"] = r.e_log_concave;
      out["graphs"].push_back(std::move(g));
    }
    out["positivity_violations"] = report.positivity_violations;
    out["palindromicity_violations"] = report.palindromicity_violations;
    out["unimodality_violations"] = report.unimodality_violations;
    out["log_concavity_violations"] = report.log_concavity_violations;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& r : report.graphs) {
      std::cout << "b=" << (r.b.empty() ? "-" : r.b) << " |E|=" << r.edge_count
                << " method=" << r.method
                << (r.e_positive ? "" : " NOT-E-POSITIVE")
                << (r.palindromic ? "" : " NOT-PALINDROMIC")
                << (r.e_unimodal ? "" : " NOT-UNIMODAL")
                << (r.e_log_concave ? "" : " NOT-LOG-CONCAVE") << "\n";
    }
    std::cout << "scanned " << report.graphs.size() << " graphs on " << n
              << " vertices: " << report.positivity_violations
              << " positivity, " << report.palindromicity_violations
              << " palindromicity, " << report.unimodality_violations
              << " unimodality, " << report.log_concavity_violations
              << " log-concavity violations\n";
  }
  return scan_exit_code(report);
}

int run_verify(const std::string& suite, int n, int max_n) {
  SuiteReport report;
  if (suite == "involutions") {
    report = verify_involutions(n, std::min(n, 6));
  } else if (suite == "treelist") {
    report = verify_treelist(n);
  } else if (suite == "kchain") {
    report = verify_kchain(max_n);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::cout << "suite " << report.suite << ": " << report.checks << " checks, "
            << report.failures << " failures\n";
  if (!report.passed()) {
    std::cout << "first counterexample: " << report.first_counterexample
              << "\n";
    return exit_codes::kInvariantViolation;
  }
  return exit_codes::kOk;
}

int run_enumerate(int n, const std::string& format) {
  if (format == "json") {
    Json out = Json::array();
    for_each_nuig(n, [&](const Nuig& g) {
      Json item;
      item["b"] = g.b();
      item["edges"] = g.edge_count();
      out.push_back(std::move(item));
    });
    std::cout << out.dump() << "\n";
  } else {
    long count = 0;
    for_each_nuig(n, [&](const Nuig& g) {
      std::cout << (g.n() == 1 ? "-" : g.b_string()) << "\n";
      ++count;
    });
    std::cout << count << " graphs\n";
  }
  return exit_codes::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chromaq: exact e-basis expansions of chromatic quasisymmetric "
      "functions of natural unit interval graphs, by five independent "
      "methods"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  auto* compute = app.add_subcommand(
      "compute", "Compute the e-expansion of X_G(x;q) for one graph");
  compute->add_option("--family", cargs.family,
                      "path|complete|almostcomplete|kchain|ladder");
  compute->add_option("--n", cargs.n, "vertex count for the family");
  compute->add_option("--gamma", cargs.gamma,
                      "comma-separated clique sizes (kchain)");
  compute->add_option("--epsilon", cargs.epsilon,
                      "comma-separated 0/1 flags (kchain)");
  compute->add_option("--b", cargs.b_seq, "b-sequence b2,...,bn");
  compute->add_option("--edges", cargs.edges_path, "edge-list file");
  compute->add_option(
      "--method", cargs.method,
      "brute|forest|llt|kchain|twoclique|nbc|all (all: every applicable "
      "method; limits brute<=8 vertices, forest<=9 vertices, llt<=24 edges; "
      "set CHROMAQ_LIMIT_OVERRIDE=1 to lift)");
  compute->add_option("--order", cargs.order, "nbc edge order: lex or "
                      "random:<seed>");
  compute->add_option("--format", cargs.format, "text|json");

  int scan_n = 0, scan_jobs = 1;
  std::string scan_format = "text";
  auto* scan = app.add_subcommand(
      "scan", "Scan all NUIGs on n vertices and report shape verdicts");
  scan->add_option("--n", scan_n, "vertex count")->required();
  scan->add_option("--jobs", scan_jobs, "worker threads");
  scan->add_option("--format", scan_format, "text|json");

  std::string verify_suite;
  int verify_n = 5, verify_max_n = 6;
  auto* verify = app.add_subcommand(
      "verify", "Run a named invariant suite (involutions|treelist|kchain)");
  verify->add_option("--suite", verify_suite, "suite name")->required();
  verify->add_option("--n", verify_n, "size bound for involutions/treelist");
  verify->add_option("--max-n", verify_max_n, "vertex bound for kchain");

  int enum_n = 0;
  std::string enum_format = "text";
  auto* enumerate =
      app.add_subcommand("enumerate", "List all NUIGs on n vertices");
  enumerate->add_option("--n", enum_n, "vertex count")->required();
  enumerate->add_option("--format", enum_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : exit_codes::kUsage;
  }

  try {
    if (compute->parsed()) return run_compute(cargs);
    if (scan->parsed()) return run_scan(scan_n, scan_jobs, scan_format);
    if (verify->parsed()) return run_verify(verify_suite, verify_n, verify_max_n);
    if (enumerate->parsed()) return run_enumerate(enum_n, enum_format);
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_codes::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_codes::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_codes::kInvariantViolation;
  }
  return exit_codes::kUsage;
}
