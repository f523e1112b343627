// dptree: decide / build / verify spanning trees that preserve distances
// from two roots, with a brute-force oracle and an instance generator.
//
// Exit codes: 0 success (check: conditions hold; oracle: theorem and oracle
// agree), 1 negative answer (conditions fail / verification fails), 2 input
// or usage error, 3 theorem/oracle disagreement.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dptree/dp_tree.hpp"
#include "dptree/graph.hpp"
#include "dptree/oracle.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

dptree::WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return dptree::parse_graph(in);
}

dptree::SpanningTree load_tree(const std::string& path, const dptree::WeightedGraph& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open tree file '" + path + "'");
  return dptree::parse_tree(in, g);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write to '" + path + "'");
  out << text;
}

std::string vertex_list(const std::vector<int>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

std::string block_list(const std::vector<std::vector<int>>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ", ";
    out += "V_" + std::to_string(i) + " = {";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(blocks[i][j]);
    }
    out += "}";
  }
  return out;
}

const char* clause_name(dptree::Cond3Clause clause) {
  return clause == dptree::Cond3Clause::kWeightClause ? "WEIGHT_CLAUSE" : "BALANCE_CLAUSE";
}

void print_report(std::ostream& os, const dptree::ConditionReport& r, int u, int v) {
  using dptree::Verdict;
  if (r.cond1 == Verdict::kFail) {
    os << "condition (1) fails: multiple shortest paths\n";
  } else {
    os << "condition (1): pass — unique shortest path P = " << vertex_list(r.path->vertices)
       << ", length " << r.path->length().to_string() << "\n";
  }
  if (r.cond2 == Verdict::kFail) {
    const auto& tie = *r.tie;
    os << "condition (2) fails: vertex " << tie.vertex << " is tied between path vertices";
    for (int i : tie.tied_anchors) os << " v_" << i;
    os << " at distance " << tie.distance.to_string() << "\n";
  } else if (r.cond2 == Verdict::kPass) {
    os << "condition (2): pass — blocks " << block_list(r.partition->blocks) << "\n";
  }
  if (r.cond3 == Verdict::kFail) {
    const auto& w = *r.cross_edge;
    os << "condition (3) fails: edge (" << w.edge.a << ", " << w.edge.b << ") ["
       << clause_name(w.clause) << "]: ";
    if (w.clause == dptree::Cond3Clause::kWeightClause) {
      os << "w = " << w.edge.w.to_string() << " < d(v_" << w.block_a << ", v_" << w.block_b
         << ") = " << w.anchor_separation.to_string() << "\n";
    } else {
      os << "|" << w.anchor_dist_a.to_string() << " - " << w.anchor_dist_b.to_string()
         << "| > " << w.edge.w.to_string() << " - " << w.anchor_separation.to_string() << "\n";
    }
  } else if (r.cond3 == Verdict::kPass) {
    os << "condition (3): pass\n";
  }
  os << "result: " << (r.overall() ? "a" : "no") << " common DP-tree of " << u << " and " << v
     << " exists\n";
}

json scaled_list(const std::vector<dptree::Distance>& ds) {
  json j = json::array();
  for (auto d : ds) j.push_back(d.scaled());
  return j;
}

const char* verdict_name(dptree::Verdict v) {
  switch (v) {
    case dptree::Verdict::kPass: return "pass";
    case dptree::Verdict::kFail: return "fail";
    case dptree::Verdict::kNotEvaluated: return "not_evaluated";
  }
  return "not_evaluated";
}

json path_json(const dptree::PathWitness& p) {
  return {{"vertices", p.vertices}, {"prefix_scaled", scaled_list(p.prefix)}};
}

json partition_json(const dptree::Partition& part) {
  return {{"anchors", part.path.vertices},
          {"block_of", part.block_of},
          {"blocks", part.blocks},
          {"anchor_dist_scaled", scaled_list(part.anchor_dist)}};
}

json tree_json(const dptree::SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({e.a, e.b});
  return {{"n", t.n}, {"edges", edges}};
}

// Everything needed to re-check each condition from the document alone:
// exact scaled distances, the path, the partition, and failure witnesses.
json report_json(const dptree::ConditionReport& r) {
  json j;
  j["cond1"] = {{"verdict", verdict_name(r.cond1)}};
  j["cond2"] = {{"verdict", verdict_name(r.cond2)}};
  j["cond3"] = {{"verdict", verdict_name(r.cond3)}};
  j["overall"] = r.overall();
  if (r.path) j["path"] = path_json(*r.path);
  if (r.partition) j["partition"] = partition_json(*r.partition);
  if (r.tie) {
    j["cond2"]["witness"] = {{"vertex", r.tie->vertex},
                             {"tied_anchors", r.tie->tied_anchors},
                             {"distance_scaled", r.tie->distance.scaled()}};
  }
  if (r.cross_edge) {
    const auto& w = *r.cross_edge;
    j["cond3"]["witness"] = {{"edge", {w.edge.a, w.edge.b}},
                             {"weight_scaled", w.edge.w.scaled()},
                             {"block_a", w.block_a},
                             {"block_b", w.block_b},
                             {"anchor_separation_scaled", w.anchor_separation.scaled()},
                             {"anchor_dist_a_scaled", w.anchor_dist_a.scaled()},
                             {"anchor_dist_b_scaled", w.anchor_dist_b.scaled()},
                             {"clause", clause_name(w.clause)}};
  }
  return j;
}

struct Args {
  std::string graph_path;
  std::string tree_path;
  std::string output_path;
  int u = 0;
  int v = 0;
  int r = 0;
  bool as_json = false;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  std::int64_t max_weight = 10;
  std::uint64_t cap = dptree::kDefaultTreeCap;
};

int cmd_check(const Args& args) {
  auto g = load_graph(args.graph_path);
  auto report = dptree::check_conditions(g, args.u, args.v);
  if (args.as_json) {
    json j = report_json(report);
    j["command"] = "check";
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    j["u"] = args.u;
    j["v"] = args.v;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(std::cout, report, args.u, args.v);
  }
  return report.overall() ? 0 : 1;
}

int cmd_construct(const Args& args) {
  auto g = load_graph(args.graph_path);
  auto result = dptree::construct_common_dp_tree(g, args.u, args.v);
  if (args.as_json) {
    json j = report_json(result.report);
    j["command"] = "construct";
    j["u"] = args.u;
    j["v"] = args.v;
    if (result.tree) j["tree"] = tree_json(*result.tree);
    std::cout << j.dump(2) << "\n";
  }
  if (!result.tree) {
    if (!args.as_json) print_report(std::cout, result.report, args.u, args.v);
    return 1;
  }
  std::string text = dptree::serialize_tree(*result.tree);
  if (args.as_json) {
    if (!args.output_path.empty()) write_output(args.output_path, text);
  } else {
    write_output(args.output_path, text);
    if (!args.output_path.empty())
      std::cout << "wrote spanning tree to " << args.output_path << "\n";
  }
  return 0;
}

int cmd_verify(const Args& args) {
  auto g = load_graph(args.graph_path);
  auto t = load_tree(args.tree_path, g);
  auto failure = dptree::verify_dp_tree(g, t, args.r);
  if (args.as_json) {
    json j;
    j["command"] = "verify";
    j["r"] = args.r;
    j["verdict"] = failure ? "fail" : "pass";
    if (failure) {
      j["witness"] = {{"vertex", failure->vertex},
                      {"tree_dist_scaled", failure->tree_dist.scaled()},
                      {"graph_dist_scaled", failure->graph_dist.scaled()}};
    }
    std::cout << j.dump(2) << "\n";
  } else if (failure) {
    std::cout << "verify: fail at vertex " << failure->vertex
              << ": d_T = " << failure->tree_dist.to_string()
              << ", d_G = " << failure->graph_dist.to_string() << "\n";
  } else {
    std::cout << "verify: pass — tree preserves all distances from " << args.r << "\n";
  }
  return failure ? 1 : 0;
}

int cmd_oracle(const Args& args) {
  auto g = load_graph(args.graph_path);
  auto report = dptree::check_conditions(g, args.u, args.v);
  auto brute = dptree::brute_force_common_dp_tree(g, args.u, args.v, args.cap);
  bool agree = report.overall() == brute.found();
  if (args.as_json) {
    json j;
    j["command"] = "oracle";
    j["u"] = args.u;
    j["v"] = args.v;
    j["theorem_overall"] = report.overall();
    j["oracle_found"] = brute.found();
    j["count"] = brute.count;
    j["trees_searched"] = brute.trees_searched;
    j["agree"] = agree;
    if (brute.tree) j["tree"] = tree_json(*brute.tree);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "theorem: " << (report.overall() ? "yes" : "no") << ", oracle: ";
    if (brute.found()) {
      std::cout << "yes (count " << brute.count << ")";
    } else {
      std::cout << "no";
    }
    std::cout << ", " << (agree ? "AGREE" : "DISAGREE") << "\n";
    if (brute.tree) std::cout << dptree::serialize_tree(*brute.tree);
  }
  return agree ? 0 : 3;
}

int cmd_gen(const Args& args) {
  dptree::GenSpec spec{args.n, args.m, args.max_weight, args.seed};
  auto g = dptree::random_connected_graph(spec);
  std::string text = dptree::serialize_graph(g);
  write_output(args.output_path, text);
  if (args.as_json) {
    json j;
    j["command"] = "gen";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["seed"] = args.seed;
    j["max_weight"] = args.max_weight;
    if (!args.output_path.empty()) j["output"] = args.output_path;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning trees that preserve distances from two roots"};
  app.require_subcommand(1);
  Args args;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("-g,--graph", args.graph_path, "graph file")->required();
  };
  auto add_uv = [&](CLI::App* cmd) {
    cmd->add_option("-u", args.u, "first root vertex")->required();
    cmd->add_option("-v", args.v, "second root vertex")->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", args.as_json, "machine-readable output"); };

  auto* check = app.add_subcommand("check", "check the three common-DP-tree conditions");
  add_graph(check);
  add_uv(check);
  add_json(check);

  auto* construct = app.add_subcommand("construct", "build a common DP tree when one exists");
  add_graph(construct);
  add_uv(construct);
  construct->add_option("-o,--output", args.output_path, "tree file to write (default stdout)");
  add_json(construct);

  auto* verify = app.add_subcommand("verify", "verify a tree preserves distances from a root");
  add_graph(verify);
  verify->add_option("-t,--tree", args.tree_path, "tree file")->required();
  verify->add_option("-r", args.r, "root vertex")->required();
  add_json(verify);

  auto* oracle = app.add_subcommand("oracle", "compare the conditions against brute force");
  add_graph(oracle);
  add_uv(oracle);
  oracle->add_option("--cap", args.cap, "refuse graphs whose tree bound exceeds this");
  add_json(oracle);

  auto* gen = app.add_subcommand("gen", "generate a seeded random connected instance");
  gen->add_option("--n", args.n, "vertex count")->required();
  gen->add_option("--m", args.m, "edge count")->required();
  gen->add_option("--max-weight", args.max_weight, "weights drawn from [1, max]");
  gen->add_option("--seed", args.seed, "generator seed");
  gen->add_option("-o,--output", args.output_path, "graph file to write (default stdout)");
  add_json(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(args);
    if (construct->parsed()) return cmd_construct(args);
    if (verify->parsed()) return cmd_verify(args);
    if (oracle->parsed()) return cmd_oracle(args);
    if (gen->parsed()) return cmd_gen(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
