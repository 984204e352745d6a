// wpo: command-line front end for the weighted proper orientation solvers.
//
// Reports go to stdout as "key value" lines, diagnostics to stderr.
// Exit codes: 0 solved / yes / proper, 1 decision no / not proper / bench
// mismatch, 2 infeasible, 64 usage, 65 bad input data, 66 unreadable file,
// 70 internal error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpo/wpo.hpp"

namespace {

using namespace wpo;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open '" + path + "'");
  }
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw FileError("cannot write '" + path + "'");
  }
  return out;
}

GraphFile load_graph(const std::string& path) {
  std::ifstream in = open_in(path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

TreeDecomposition load_td(const std::string& path, std::size_t n) {
  std::ifstream in = open_in(path);
  try {
    return read_td(in, n);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

Orientation load_orientation(const std::string& path, const WeightedGraph& g) {
  std::ifstream in = open_in(path);
  try {
    return read_orientation(in, g);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

void save_witness(const std::string& path, const WeightedGraph& g, const Orientation& d) {
  if (path.empty()) {
    return;
  }
  std::ofstream out = open_out(path);
  write_orientation(out, g, d);
}

std::vector<Weight> parse_list(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("'" + item + "' is not an integer");
    }
    if (used != item.size()) {
      throw UsageError("'" + item + "' is not an integer");
    }
    if (value <= 0) {
      throw std::invalid_argument("item " + item + " is not positive");
    }
    out.push_back(static_cast<Weight>(value));
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

void report_orientation(const WeightedGraph& g, const Orientation& d) {
  std::cout << "mu " << mu_minus(g, d) << '\n';
  std::cout << "max_indegree " << max_indegree(g, d) << '\n';
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string method = "auto";
  std::optional<Weight> k;
  std::string td;
  std::string witness;
  std::size_t limit = kDefaultBruteForceLimit;
};

NiceTreeDecomposition decomposition_for(const WeightedGraph& g, const std::string& td_path) {
  TreeDecomposition td = td_path.empty() ? heuristic_td(g) : load_td(td_path, g.num_vertices());
  std::cout << "width " << validate_td(g, td) << '\n';
  return nicefy(td);
}

int run_solve(const SolveOptions& o) {
  const GraphFile file = load_graph(o.input);
  const WeightedGraph& g = file.graph;
  std::string method = o.method;
  if (method == "auto") {
    method = is_tree(g) ? "tree" : g.num_edges() <= 16 ? "brute" : "twdp";
  }
  if (!o.td.empty() && method != "twdp") {
    throw UsageError("--td only applies to --method twdp");
  }
  std::cout << "method " << method << '\n';
  std::cout << "n " << g.num_vertices() << '\n';
  std::cout << "m " << g.num_edges() << '\n';
  std::cout << "K " << g.max_weight() << '\n';

  if (o.k) {
    std::cout << "k " << *o.k << '\n';
    std::optional<Orientation> d;
    if (method == "tree") {
      d = tree_decide_orientation(g, *o.k);
    } else if (method == "twdp") {
      d = twdp_decide(g, *o.k, decomposition_for(g, o.td));
    } else {
      auto sol = brute_force_po(g, o.limit);
      if (sol && sol->po <= *o.k) {
        d = std::move(sol->witness);
      }
    }
    std::cout << "decision " << (d ? "yes" : "no") << '\n';
    if (!d) {
      return kExitNo;
    }
    report_orientation(g, *d);
    save_witness(o.witness, g, *d);
    return kExitOk;
  }

  std::optional<PoSolution> sol;
  if (method == "tree") {
    sol = tree_po(g);
  } else if (method == "twdp") {
    sol = twdp_po(g, decomposition_for(g, o.td));
  } else {
    sol = brute_force_po(g, o.limit);
  }
  if (!sol) {
    std::cout << "po infeasible\n";
    return kExitInfeasible;
  }
  std::cout << "po " << sol->po << '\n';
  report_orientation(g, sol->witness);
  save_witness(o.witness, g, sol->witness);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string witness;
};

int run_verify(const VerifyOptions& o) {
  const GraphFile file = load_graph(o.input);
  const WeightedGraph& g = file.graph;
  const Orientation d = load_orientation(o.witness, g);
  const auto conflict = find_conflict(g, d);
  std::cout << "proper " << (conflict ? "no" : "yes") << '\n';
  report_orientation(g, d);
  if (conflict) {
    const Edge& e = g.edge(*conflict);
    std::cout << "conflict " << e.u + 1 << ' ' << e.v + 1 << '\n';
    std::cout << "conflict_inweight " << compute_inweights(g, d).inweight[e.u] << '\n';
    return kExitNo;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::string set;
  std::optional<Weight> target;
  std::string input;
  std::optional<Weight> k;
  std::size_t n = 10;
  std::size_t m = 0;
  Weight max_weight = 3;
  std::uint64_t seed = 1;
  std::string td_out;
};

std::vector<std::string> provenance_comments(const WpoInstance& inst) {
  std::vector<std::string> out{"construction " + inst.provenance.construction};
  for (const std::string& note : inst.provenance.notes) {
    out.push_back(note);
  }
  for (const auto& [name, value] : inst.provenance.bounds) {
    out.push_back(name + "=" + std::to_string(value));
  }
  for (std::size_t v = 0; v < inst.provenance.labels.size(); ++v) {
    out.push_back("vertex " + std::to_string(v + 1) + " " + inst.provenance.labels[v]);
  }
  return out;
}

int run_gen(const GenOptions& o) {
  if (o.kind == "subsetsum") {
    if (!o.target) {
      throw UsageError("gen subsetsum needs --target");
    }
    const WpoInstance inst = subsetsum_to_tree(parse_list(o.set), *o.target);
    write_graph(std::cout, inst.graph, provenance_comments(inst));
    return kExitOk;
  }
  if (o.kind == "mmi") {
    if (o.input.empty() || !o.k) {
      throw UsageError("gen mmi needs --input and --k");
    }
    const GraphFile file = load_graph(o.input);
    const WpoInstance inst = mmi_reduce_full({file.graph, *o.k, {}});
    write_graph(std::cout, inst.graph, provenance_comments(inst));
    return kExitOk;
  }
  Rng rng(o.seed);
  const std::string seed_note = "seed " + std::to_string(o.seed);
  if (o.kind == "tree") {
    write_graph(std::cout, random_tree(o.n, o.max_weight, rng), {"random tree", seed_note});
    return kExitOk;
  }
  if (o.kind == "graph") {
    const std::size_t m = o.m ? o.m : o.n + o.n / 2;
    write_graph(std::cout, random_connected_graph(o.n, m, o.max_weight, rng), {"random connected graph", seed_note});
    return kExitOk;
  }
  if (o.kind == "2tree") {
    const GraphWithDecomposition p = random_partial_2tree(o.n, o.max_weight, 30, rng);
    write_graph(std::cout, p.graph, {"random partial 2-tree", seed_note});
    if (!o.td_out.empty()) {
      std::ofstream out = open_out(o.td_out);
      write_td(out, p.td, p.graph.num_vertices());
    }
    return kExitOk;
  }
  throw UsageError("unknown generator '" + o.kind + "'");
}

// ---------------------------------------------------------------------------

struct Bound4Options {
  std::string input;
  std::string witness;
};

int run_bound4(const Bound4Options& o) {
  const GraphFile file = load_graph(o.input);
  const WeightedGraph& g = file.graph;
  const Orientation d = bound4_orientation(g);
  std::cout << "proper " << (is_proper(g, d) ? "yes" : "no") << '\n';
  std::cout << "K " << g.max_weight() << '\n';
  report_orientation(g, d);
  if (o.witness.empty()) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      std::cout << "arc " << d.tail(g, e) + 1 << ' ' << d.head(g, e) + 1 << '\n';
    }
  } else {
    save_witness(o.witness, g, d);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string suite;
  std::optional<std::size_t> n;
  std::optional<Weight> max_weight;
  int tw = 2;
  std::optional<Weight> k;
  std::size_t count = 5;
  std::uint64_t seed = 1;
  std::size_t limit = 16;
  bool exhaustive = false;
};

int bench_tree_exhaustive(std::size_t n, Weight max_weight, std::size_t limit) {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& shape : all_unlabeled_trees(n)) {
    for_each_weighting(shape.size(), max_weight, [&](const std::vector<Weight>& w) {
      const WeightedGraph g(n, with_weights(shape, w));
      const PoSolution sol = tree_po(g);
      const auto oracle = brute_force_po(g, limit);
      ++cases;
      if (!oracle || oracle->po != sol.po) {
        ++mismatches;
      }
    });
  }
  std::cout << "instances " << cases << '\n';
  std::cout << "mismatches " << mismatches << '\n';
  std::cout << "total_ms " << std::fixed << std::setprecision(1) << elapsed_ms(start) << '\n';
  return mismatches ? kExitNo : kExitOk;
}

int run_bench(const BenchOptions& o) {
  if (o.suite != "tree" && o.suite != "twdp") {
    throw UsageError("unknown bench suite '" + o.suite + "'");
  }
  const bool tree = o.suite == "tree";
  const std::size_t n = o.n.value_or(tree ? 1000 : 30);
  const Weight max_weight = o.max_weight.value_or(tree ? 50 : 4);
  if (n == 0 || max_weight == 0) {
    throw UsageError("--n and --K must be positive");
  }
  if (tree && o.exhaustive) {
    return bench_tree_exhaustive(n, max_weight, o.limit);
  }
  if (!tree && o.tw != 1 && o.tw != 2) {
    throw UsageError("--tw must be 1 or 2");
  }
  if (!tree && o.tw == 2 && n < 3) {
    throw UsageError("--tw 2 needs --n >= 3");
  }

  Rng rng(o.seed);
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  double total = 0;
  std::cout << "# instance n m K po ms check\n";
  for (std::size_t i = 0; i < o.count; ++i) {
    std::optional<PoSolution> sol;
    WeightedGraph g;
    double ms = 0;
    std::string check = "-";
    if (tree || o.tw == 1) {
      g = random_tree(n, max_weight, rng);
    }
    if (tree) {
      const auto start = std::chrono::steady_clock::now();
      sol = tree_po(g);
      ms = elapsed_ms(start);
      if (sol->po < g.max_weight() || sol->po > 4 * g.max_weight()) {
        check = "BOUND";
        ++mismatches;
      }
    } else {
      TreeDecomposition td;
      if (o.tw == 1) {
        td = heuristic_td(g);
      } else {
        GraphWithDecomposition p = random_partial_2tree(n, max_weight, 30, rng);
        g = std::move(p.graph);
        td = std::move(p.td);
      }
      const auto start = std::chrono::steady_clock::now();
      const NiceTreeDecomposition ntd = nicefy(td);
      sol = o.k ? twdp_po_capped(g, ntd, *o.k) : twdp_po(g, ntd);
      ms = elapsed_ms(start);
    }
    if (check == "-" && g.num_edges() <= o.limit) {
      const auto oracle = brute_force_po(g, o.limit);
      const bool agree = o.k && (!oracle || oracle->po > *o.k) ? !sol.has_value()
                                                                : sol && oracle && sol->po == oracle->po;
      check = agree ? "ok" : "MISMATCH";
      mismatches += agree ? 0 : 1;
      ++checked;
    }
    total += ms;
    std::cout << i << ' ' << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.max_weight() << ' '
              << (sol ? std::to_string(sol->po) : o.k ? ">" + std::to_string(*o.k) : "infeasible") << ' '
              << std::fixed << std::setprecision(2) << ms << ' ' << check << '\n';
  }
  std::cout << "instances " << o.count << '\n';
  std::cout << "oracle_checked " << checked << '\n';
  std::cout << "mismatches " << mismatches << '\n';
  std::cout << "total_ms " << std::fixed << std::setprecision(1) << total << '\n';
  return mismatches ? kExitNo : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for the weighted proper orientation number"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "compute po(G,w), or decide po(G,w) <= k");
  s->add_option("--input", solve.input, "graph file")->required();
  s->add_option("--method", solve.method, "auto, tree, twdp or brute")
      ->check(CLI::IsMember({"auto", "tree", "twdp", "brute"}));
  s->add_option("--k", solve.k, "decide po <= k instead of optimizing");
  s->add_option("--td", solve.td, "tree decomposition (.td) for --method twdp");
  s->add_option("--witness", solve.witness, "write the orientation here");
  s->add_option("--limit", solve.limit, "edge cap for --method brute");
  s->callback([&] { action = [&] { return run_solve(solve); }; });

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "check an orientation for properness and report mu");
  v->add_option("--input", verify.input, "graph file")->required();
  v->add_option("--witness", verify.witness, "orientation file, one '<tail> <head>' per edge")->required();
  v->callback([&] { action = [&] { return run_verify(verify); }; });

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "emit an instance on stdout");
  g->add_option("kind", gen.kind, "subsetsum, mmi, tree, graph or 2tree")->required();
  g->add_option("--set", gen.set, "comma-separated Subset Sum items");
  g->add_option("--target", gen.target, "Subset Sum target");
  g->add_option("--input", gen.input, "source graph for mmi");
  g->add_option("--k", gen.k, "source bound for mmi");
  g->add_option("--n", gen.n, "vertex count for random kinds");
  g->add_option("--m", gen.m, "edge count for graph");
  g->add_option("--K", gen.max_weight, "largest random weight");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--td", gen.td_out, "for 2tree: also write its width-2 decomposition here");
  g->callback([&] { action = [&] { return run_gen(gen); }; });

  Bound4Options bound4;
  auto* b = app.add_subcommand("bound4", "build a proper tree orientation with indegrees <= 4");
  b->add_option("--input", bound4.input, "tree file")->required();
  b->add_option("--witness", bound4.witness, "write the orientation here instead of stdout");
  b->callback([&] { action = [&] { return run_bound4(bound4); }; });

  BenchOptions bench;
  auto* c = app.add_subcommand("bench", "time seeded random instances");
  c->add_option("suite", bench.suite, "tree or twdp")->required();
  c->add_option("--n", bench.n, "vertices per instance");
  c->add_option("--K", bench.max_weight, "largest edge weight");
  c->add_option("--tw", bench.tw, "treewidth of twdp instances (1 or 2)");
  c->add_option("--k", bench.k, "cap on the searched bound (twdp)");
  c->add_option("--count", bench.count, "number of instances");
  c->add_option("--seed", bench.seed, "random seed");
  c->add_option("--limit", bench.limit, "brute-force cross-check when m <= limit");
  c->add_flag("--exhaustive", bench.exhaustive, "tree: every shape and weighting up to --K");
  c->callback([&] { action = [&] { return run_bench(bench); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const ParseError& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitData;
  } catch (const std::overflow_error& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitData;
  } catch (const std::length_error& e) {
    std::cerr << "wpo: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "wpo: internal error: " << e.what() << '\n';
    return kExitSoftware;
  }
}
