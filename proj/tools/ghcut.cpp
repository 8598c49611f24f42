#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghcut/bench_recursion.hpp"
#include "ghcut/generators.hpp"
#include "ghcut/gomory_hu.hpp"
#include "ghcut/io.hpp"
#include "ghcut/isolating_cuts.hpp"
#include "ghcut/maxflow.hpp"
#include "ghcut/oracle.hpp"
#include "ghcut/tree_mincuts.hpp"

using namespace ghcut;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "dimacs";
  std::string stats_path;
};

// "0,1;4;7,8" -> {{0,1},{4},{7,8}}
std::vector<VertexSet> parse_groups(const std::string& text) {
  std::vector<VertexSet> groups;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    VertexSet group;
    std::stringstream ids(part);
    std::string id;
    while (std::getline(ids, id, ',')) {
      if (id.find_first_not_of(" \t") == std::string::npos) continue;
      group.push_back(static_cast<Vertex>(std::stol(id)));
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  return groups;
}

std::string join(const VertexSet& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

json value_json(const ExtWeight& w) {
  if (w.is_infinite()) return "inf";
  return w.value();
}

json answer_json(const OracleAnswer& a) {
  json out;
  out["value"] = value_json(a.value);
  out["witnesses"] = json::array();
  for (const Cut& c : a.witnesses) out["witnesses"].push_back(c.side);
  return out;
}

const char* procedure_name(Procedure p) { return p == Procedure::Tree ? "tree" : "leaf"; }

json stats_json(const RecursionStats& stats) {
  json out = json::array();
  for (const auto& [key, c] : stats.entries()) {
    out.push_back({{"procedure", procedure_name(key.first)},
                   {"k", key.second},
                   {"calls", c.calls},
                   {"sum_vertices", c.sum_vertices},
                   {"sum_tree_vertices", c.sum_tree_vertices},
                   {"sum_free_edges", c.sum_free_edges}});
  }
  return out;
}

void write_stats(const Globals& globals, const std::string& command, const RecursionStats& stats) {
  if (globals.stats_path.empty()) return;
  json report;
  report["command"] = command;
  report["seed"] = globals.seed;
  report["stats"] = stats_json(stats);
  std::ofstream out(globals.stats_path);
  if (!out) throw std::runtime_error("cannot write " + globals.stats_path);
  out << report.dump(2) << '\n';
}

Graph load(const Globals& globals, const std::string& path) { return load_graph(path, parse_format(globals.format)); }

// Estimates file: "s <source>" followed by "t <terminal> <estimate>" lines.
struct Estimates {
  Vertex source = -1;
  std::map<Vertex, Weight> values;
};

Estimates load_estimates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Estimates e;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s" && ls >> e.source) continue;
    Vertex t = 0;
    Weight w = 0;
    if (tag == "t" && ls >> t >> w) {
      e.values[t] = w;
      continue;
    }
    throw ParseError(number, "expected 's <source>' or 't <terminal> <estimate>'");
  }
  if (e.source < 0) throw ParseError(0, "missing source line");
  return e;
}

int run_mincuts(const Globals& globals, Procedure procedure, const std::string& graph_path,
                const std::string& tree_path, int k, double reps_coeff) {
  const Graph g = load(globals, graph_path);
  const SteinerTree t = load_tree(tree_path);
  MuTable mu(g.num_vertices());
  RecursionStats stats;
  TreeMincutsOptions options;
  options.reps_coeff = reps_coeff;
  const auto start = std::chrono::steady_clock::now();
  if (procedure == Procedure::Tree) {
    tree_mincuts(g, t, k, mu, globals.seed, stats, options);
  } else {
    leaf_mincuts(g, t, k, mu, globals.seed, stats, options);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << "seed " << globals.seed << "\nk " << k << "\nsource " << t.source() << '\n';
  for (Vertex u : t.vertices()) {
    if (u != t.source()) std::cout << "mu " << u << ' ' << mu.value(u).to_string() << '\n';
  }
  const RecursionCounters total = stats.total();
  std::cout << "calls " << total.calls << "\nsum_vertices " << total.sum_vertices << '\n';
  std::cerr << "time " << std::fixed << std::setprecision(3) << seconds << " s\n";
  write_stats(globals, procedure == Procedure::Tree ? "tree-mincuts" : "leaf-mincuts", stats);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cut toolkit: max-flow, isolating cuts, tree-guided single-source cuts, Gomory-Hu trees"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
  app.add_option("--format", globals.format, "Graph file format")
      ->check(CLI::IsMember({"dimacs", "json"}))
      ->capture_default_str();
  app.add_option("--stats", globals.stats_path, "Write recursion statistics as JSON to this file");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  std::string kind = "erdos-renyi-weighted";
  Vertex gen_n = 8;
  Weight min_w = 1, max_w = 10, planted = 3;
  std::optional<double> edge_p;
  std::string gen_out;
  gen->add_option("--kind", kind, "erdos-renyi-weighted | clique | planted-cut")->capture_default_str();
  gen->add_option("-n,--vertices", gen_n, "Vertex count")->capture_default_str();
  gen->add_option("--min-weight", min_w)->capture_default_str();
  gen->add_option("--max-weight", max_w)->capture_default_str();
  gen->add_option("--edge-probability", edge_p);
  gen->add_option("--planted-value", planted)->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // maxflow
  auto* mf = app.add_subcommand("maxflow", "Minimum s-t cut");
  std::string mf_graph;
  Vertex mf_s = 0, mf_t = 0;
  mf->add_option("graph", mf_graph)->required();
  mf->add_option("s", mf_s)->required();
  mf->add_option("t", mf_t)->required();

  // isolate
  auto* iso = app.add_subcommand("isolate", "Minimum isolating cuts");
  std::string iso_graph, iso_groups;
  iso->add_option("graph", iso_graph)->required();
  iso->add_option("--groups", iso_groups, "Groups as \"0,1;4;7,8\"")->required();

  // tree-mincuts / leaf-mincuts
  std::string tm_graph, tm_tree;
  int tm_k = 2;
  double tm_reps = 3.0;
  auto* tm = app.add_subcommand("tree-mincuts", "Single-source cuts guided by a Steiner tree");
  auto* lm = app.add_subcommand("leaf-mincuts", "Single-source cuts from a leaf source of a Steiner tree");
  for (auto* sub : {tm, lm}) {
    sub->add_option("graph", tm_graph)->required();
    sub->add_option("tree", tm_tree)->required();
    sub->add_option("--k", tm_k, "Tree edges a cut may cross")->capture_default_str();
    sub->add_option("--reps-coeff", tm_reps, "Pruning repetitions per call: ceil(c * log2 n)")->capture_default_str();
  }

  // sstcv
  auto* sv = app.add_subcommand("sstcv", "Check which single-source estimates are tight");
  std::string sv_graph, sv_est;
  std::vector<std::string> sv_trees;
  int sv_k = 2;
  double sv_reps = 3.0;
  sv->add_option("graph", sv_graph)->required();
  sv->add_option("estimates", sv_est, "Lines 's <source>' and 't <terminal> <estimate>'")->required();
  sv->add_option("trees", sv_trees, "Guide tree files")->required();
  sv->add_option("--k", sv_k)->capture_default_str();
  sv->add_option("--reps-coeff", sv_reps)->capture_default_str();

  // ghtree
  auto* gh = app.add_subcommand("ghtree", "Gomory-Hu tree by Gusfield's method");
  std::string gh_graph;
  bool gh_verify = false;
  gh->add_option("graph", gh_graph)->required();
  gh->add_flag("--verify", gh_verify, "Check every pair against max-flow");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force reference values as JSON");
  orc->require_subcommand(1);
  std::string or_graph, or_tree, or_groups;
  Vertex or_s = 0, or_t = 0;
  int or_k = 2;
  auto* or_lambda = orc->add_subcommand("lambda", "lambda(s, t)");
  or_lambda->add_option("graph", or_graph)->required();
  or_lambda->add_option("s", or_s)->required();
  or_lambda->add_option("t", or_t)->required();
  auto* or_ltk = orc->add_subcommand("lambda-tk", "Cheapest (s, t)-cut crossing at most k tree edges");
  auto* or_etk = orc->add_subcommand("eta-tk", "As lambda-tk, also cutting the source's leaf edge");
  for (auto* sub : {or_ltk, or_etk}) {
    sub->add_option("graph", or_graph)->required();
    sub->add_option("tree", or_tree, "Tree file; its source is s")->required();
    sub->add_option("t", or_t)->required();
    sub->add_option("--k", or_k)->capture_default_str();
  }
  auto* or_iso = orc->add_subcommand("isolating", "Minimum isolating cuts");
  or_iso->add_option("graph", or_graph)->required();
  or_iso->add_option("--groups", or_groups)->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Recursion sizes against the polylog bounds");
  std::vector<Vertex> sizes{64, 128, 256, 512, 1024};
  std::vector<std::uint64_t> bench_seeds;
  int bench_k = 2;
  double bench_reps = 3.0, bench_degree = 8.0;
  std::optional<double> max_slope;
  bench->add_option("--sizes", sizes)->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "Instance seeds (default: --seed)")->delimiter(',');
  bench->add_option("--k", bench_k)->capture_default_str();
  bench->add_option("--reps-coeff", bench_reps)->capture_default_str();
  bench->add_option("--degree", bench_degree, "Expected vertex degree")->capture_default_str();
  bench->add_option("--max-slope", max_slope, "Fail if either ratio's log-log slope exceeds this");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GenerateParams p;
      p.kind = parse_graph_kind(kind);
      p.n = gen_n;
      p.seed = globals.seed;
      p.min_weight = min_w;
      p.max_weight = max_w;
      p.edge_probability = edge_p;
      p.planted_value = planted;
      const Graph g = generate(p);
      if (gen_out.empty()) {
        write_graph(std::cout, g, parse_format(globals.format));
      } else {
        save_graph(gen_out, g, parse_format(globals.format));
      }
      return 0;
    }

    if (*mf) {
      const Graph g = load(globals, mf_graph);
      const FlowResult r = max_flow(g, mf_s, mf_t);
      std::cout << "value " << r.value << "\nsource_side " << join(r.source_side(g.num_vertices())) << '\n';
      return 0;
    }

    if (*iso) {
      const Graph g = load(globals, iso_graph);
      const auto groups = parse_groups(iso_groups);
      const IsolatingResult r = isolating_cuts(g, groups);
      for (const IsolatingCut& c : r.cuts) {
        std::cout << "group " << c.group << " value " << c.value << " size " << c.side.size() << " side "
                  << join(c.side) << '\n';
      }
      return 0;
    }

    if (*tm) return run_mincuts(globals, Procedure::Tree, tm_graph, tm_tree, tm_k, tm_reps);
    if (*lm) return run_mincuts(globals, Procedure::Leaf, tm_graph, tm_tree, tm_k, tm_reps);

    if (*sv) {
      const Graph g = load(globals, sv_graph);
      const Estimates est = load_estimates(sv_est);
      std::vector<SteinerTree> trees;
      for (const auto& path : sv_trees) trees.push_back(load_tree(path));
      VertexSet terminals{est.source};
      for (const auto& [t, w] : est.values) terminals.push_back(t);
      std::sort(terminals.begin(), terminals.end());
      RecursionStats stats;
      TreeMincutsOptions options;
      options.reps_coeff = sv_reps;
      const auto verdicts =
          sstcv_verify(g, terminals, est.source, est.values, trees, sv_k, globals.seed, &stats, options);
      std::cout << "seed " << globals.seed << "\nk " << sv_k << "\nsource " << est.source << '\n';
      for (const auto& [t, v] : verdicts) {
        std::cout << "t " << t << ' ' << est.values.at(t) << ' ' << (v == Verdict::Tight ? "tight" : "loose") << '\n';
      }
      write_stats(globals, "sstcv", stats);
      return 0;
    }

    if (*gh) {
      const Graph g = load(globals, gh_graph);
      std::size_t calls = 0;
      const GHTree t = build_gusfield(g, {}, &calls);
      std::cout << "t " << t.size() << '\n';
      for (Vertex v = 0; v < t.size(); ++v) {
        if (t.parent[v] >= 0) std::cout << "e " << t.parent[v] << ' ' << v << '\n';
      }
      std::cout << "s " << t.root << '\n';
      for (Vertex v = 0; v < t.size(); ++v) {
        if (t.parent[v] >= 0) std::cout << "w " << v << ' ' << t.weight[v] << '\n';
      }
      std::cout << "c flow_calls " << calls << '\n';
      if (gh_verify) {
        if (const auto bad = verify_gh(g, t)) {
          std::cout << "counterexample " << bad->a << ' ' << bad->b << ' ' << bad->tree_value << ' '
                    << bad->true_value << '\n';
          return 1;
        }
        std::cout << "verify ok\n";
      }
      return 0;
    }

    if (*orc) {
      const Graph g = load(globals, or_graph);
      json out;
      if (*or_lambda) {
        out["query"] = "lambda";
        out["s"] = or_s;
        out["t"] = or_t;
        out.update(answer_json(brute_lambda(g, or_s, or_t)));
      } else if (*or_ltk || *or_etk) {
        const SteinerTree tree = load_tree(or_tree);
        const bool eta = or_etk->parsed();
        out["query"] = eta ? "eta-tk" : "lambda-tk";
        out["s"] = tree.source();
        out["t"] = or_t;
        out["k"] = or_k;
        out.update(answer_json(eta ? brute_eta_tk(g, tree, tree.source(), or_t, or_k)
                                   : brute_lambda_tk(g, tree, tree.source(), or_t, or_k)));
      } else {
        const auto groups = parse_groups(or_groups);
        out["query"] = "isolating";
        out["groups"] = json::array();
        const auto answers = brute_isolating(g, groups);
        for (std::size_t i = 0; i < answers.size(); ++i) {
          json entry = answer_json(answers[i].answer);
          entry["group"] = groups[i];
          entry["minimal_side"] = answers[i].minimal_side;
          out["groups"].push_back(entry);
        }
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*bench) {
      BenchConfig config;
      config.sizes = sizes;
      config.k = bench_k;
      config.seeds = bench_seeds.empty() ? std::vector<std::uint64_t>{globals.seed} : bench_seeds;
      config.reps_coeff = bench_reps;
      config.average_degree = bench_degree;
      const auto rows = bench_recursion(config);
      std::cout << "k " << config.k << "\nseeds";
      for (auto s : config.seeds) std::cout << ' ' << s;
      std::cout << "\n" << std::left << std::setw(7) << "n" << std::setw(10) << "m" << std::setw(8) << "t"
                << std::setw(12) << "calls" << std::setw(14) << "sum_n" << std::setw(14) << "sum_m"
                << std::setw(14) << "ratio_n" << "ratio_m\n";
      std::vector<double> xs, rn, rm;
      for (const BenchRow& r : rows) {
        std::cout << std::setw(7) << r.n << std::setw(10) << r.m << std::setw(8) << r.tree_size << std::setw(12)
                  << r.calls << std::setw(14) << r.sum_vertices << std::setw(14) << r.sum_free_edges
                  << std::setw(14) << std::setprecision(6) << r.vertex_ratio << r.edge_ratio << '\n';
        xs.push_back(r.n);
        rn.push_back(r.vertex_ratio);
        rm.push_back(r.edge_ratio);
      }
      int status = 0;
      if (rows.size() >= 2) {
        const double sn = loglog_slope(xs, rn);
        const double sm = loglog_slope(xs, rm);
        std::cout << "slope_ratio_n " << sn << "\nslope_ratio_m " << sm << '\n';
        if (max_slope && (sn > *max_slope || sm > *max_slope)) status = 1;
      }
      return status;
    }
  } catch (const ParseError& e) {
    std::cerr << "ghcut: parse error";
    if (e.line()) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ghcut: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
