#include "dptree/dp_tree.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace dptree {

namespace {

void check_vertex(int x, int n, const char* what) {
  if (x < 0 || x >= n)
    throw std::invalid_argument(std::string(what) + " " + std::to_string(x) + " out of range 0.." +
                                std::to_string(n - 1));
}

Edge canonical_edge(int a, int b, Weight w) { return a < b ? Edge{a, b, w} : Edge{b, a, w}; }

}  // namespace

PartitionResult build_partition(const WeightedGraph& g, const PathWitness& p) {
  const int n = g.vertex_count();
  if (p.vertices.empty() || p.vertices.size() != p.prefix.size())
    throw std::invalid_argument("build_partition: malformed path witness");
  if (p.prefix[0] != Distance{})
    throw std::invalid_argument("build_partition: path prefix must start at 0");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    check_vertex(p.vertices[i], n, "path vertex");
    if (seen[p.vertices[i]])
      throw std::invalid_argument("build_partition: path repeats vertex " +
                                  std::to_string(p.vertices[i]));
    seen[p.vertices[i]] = true;
    if (i > 0) {
      auto w = g.edge_weight(p.vertices[i - 1], p.vertices[i]);
      if (!w || p.prefix[i] - p.prefix[i - 1] != *w)
        throw std::invalid_argument("build_partition: p is not a path in g");
    }
  }

  SetDistance sd = distances_from_set(g, p.vertices);
  for (int x = 0; x < n; ++x) {
    if (sd.nearest[x].size() >= 2) {
      return TieWitness{x, sd.nearest[x], sd.dist_to_set[x]};
    }
  }

  Partition part;
  part.path = p;
  part.block_of.resize(n);
  part.blocks.resize(p.vertices.size());
  part.anchor_dist.resize(n);
  for (int x = 0; x < n; ++x) {
    int i = sd.nearest[x][0];
    part.block_of[x] = i;
    part.blocks[i].push_back(x);
    part.anchor_dist[x] = sd.dist_to_set[x];
  }
  return part;
}

ConditionReport check_conditions(const WeightedGraph& g, int u, int v) {
  check_vertex(u, g.vertex_count(), "vertex u");
  check_vertex(v, g.vertex_count(), "vertex v");
  if (u == v) throw std::invalid_argument("u and v must be distinct vertices");

  ConditionReport report;
  auto path = unique_shortest_path(g, u, v);
  if (!path) {
    report.cond1 = Verdict::kFail;
    return report;
  }
  report.cond1 = Verdict::kPass;
  report.path = *path;

  auto part_result = build_partition(g, *path);
  if (auto* tie = std::get_if<TieWitness>(&part_result)) {
    report.cond2 = Verdict::kFail;
    report.tie = *tie;
    return report;
  }
  report.cond2 = Verdict::kPass;
  report.partition = std::get<Partition>(std::move(part_result));
  const Partition& part = *report.partition;

  // Cross-block edges, in canonical order so the first failure is the
  // lexicographically smallest witness. d(v_i, v_j) comes from the prefix
  // array: subpaths of the unique shortest path are shortest.
  report.cond3 = Verdict::kPass;
  for (const auto& e : g.edges()) {
    int i = part.block_of[e.a];
    int j = part.block_of[e.b];
    if (i == j) continue;
    Distance separation = part.path.prefix[std::max(i, j)] - part.path.prefix[std::min(i, j)];
    std::optional<Cond3Clause> clause;
    if (e.w < separation) {
      clause = Cond3Clause::kWeightClause;
    } else if (abs_diff(part.anchor_dist[e.a], part.anchor_dist[e.b]) > e.w - separation) {
      clause = Cond3Clause::kBalanceClause;
    }
    if (clause) {
      report.cond3 = Verdict::kFail;
      report.cross_edge = CrossEdgeWitness{e,        i,
                                           j,        separation,
                                           part.anchor_dist[e.a], part.anchor_dist[e.b],
                                           *clause};
      break;
    }
  }
  return report;
}

void require_spanning_tree(const WeightedGraph& g, const SpanningTree& t) {
  const int n = g.vertex_count();
  if (t.n != n)
    throw TreeError("tree is over " + std::to_string(t.n) + " vertices, graph has " +
                    std::to_string(n));
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw TreeError("spanning tree needs " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(t.edges.size()));

  std::vector<int> root(n);
  for (int x = 0; x < n; ++x) root[x] = x;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    auto w = e.a >= 0 && e.a < n ? g.edge_weight(e.a, e.b) : std::nullopt;
    if (!w)
      throw TreeError("tree edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                      ") is not an edge of the graph");
    if (*w != e.w)
      throw TreeError("tree edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                      ") carries weight " + e.w.to_string() + ", graph says " + w->to_string());
    int ra = find(e.a);
    int rb = find(e.b);
    if (ra == rb)
      throw TreeError("tree edges contain a cycle through (" + std::to_string(e.a) + ", " +
                      std::to_string(e.b) + ")");
    root[ra] = rb;
  }
  // n-1 edges and no cycle imply connected.
}

DistanceMap tree_distances(const SpanningTree& t, int root) {
  check_vertex(root, t.n, "root vertex");
  std::vector<std::vector<WeightedGraph::Neighbor>> adj(t.n);
  for (const auto& e : t.edges) {
    check_vertex(e.a, t.n, "tree vertex");
    check_vertex(e.b, t.n, "tree vertex");
    adj[e.a].push_back({e.b, e.w});
    adj[e.b].push_back({e.a, e.w});
  }

  DistanceMap dm;
  dm.source = root;
  dm.dist.assign(t.n, Distance{});
  dm.parent.assign(t.n, -1);
  dm.multi.assign(t.n, false);
  std::vector<bool> seen(t.n, false);
  seen[root] = true;
  std::vector<int> stack{root};
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& nb : adj[x]) {
      if (!seen[nb.to]) {
        seen[nb.to] = true;
        ++reached;
        dm.dist[nb.to] = dm.dist[x] + nb.w;
        dm.parent[nb.to] = x;
        stack.push_back(nb.to);
      }
    }
  }
  if (reached != t.n) throw TreeError("tree edges do not connect all vertices");
  return dm;
}

ConstructResult construct_common_dp_tree(const WeightedGraph& g, int u, int v) {
  ConstructResult result;
  result.report = check_conditions(g, u, v);
  if (!result.report.overall()) return result;

  const Partition& part = *result.report.partition;
  const PathWitness& p = part.path;

  SpanningTree tree;
  tree.n = g.vertex_count();
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    tree.edges.push_back(
        canonical_edge(p.vertices[i], p.vertices[i + 1], p.prefix[i + 1] - p.prefix[i]));
  }
  // One shortest-path tree per block, rooted at its anchor. The id mapping
  // of the induced subgraph is order-preserving, so the smallest-id parent
  // rule picks the same edges as it would in g.
  for (std::size_t i = 0; i < part.blocks.size(); ++i) {
    const auto& block = part.blocks[i];
    if (block.size() <= 1) continue;
    InducedSubgraph sub = induced_subgraph(g, block);
    DistanceMap dm = sssp(sub.graph, sub.from_original[p.vertices[i]]);
    for (int x = 0; x < sub.graph.vertex_count(); ++x) {
      if (dm.parent[x] == -1) continue;
      int orig_a = sub.to_original[dm.parent[x]];
      int orig_b = sub.to_original[x];
      tree.edges.push_back(canonical_edge(orig_a, orig_b, *g.edge_weight(orig_a, orig_b)));
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end(), edge_less);
  result.tree = std::move(tree);
  return result;
}

std::optional<VerifyFailure> verify_dp_tree(const WeightedGraph& g, const SpanningTree& t, int r) {
  check_vertex(r, g.vertex_count(), "root vertex");
  require_spanning_tree(g, t);
  DistanceMap in_tree = tree_distances(t, r);
  DistanceMap in_graph = sssp(g, r);
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (in_tree.dist[x] != in_graph.dist[x]) {
      return VerifyFailure{x, in_tree.dist[x], in_graph.dist[x]};
    }
  }
  return std::nullopt;
}

Distance potential(const Partition& part, int x) {
  check_vertex(x, static_cast<int>(part.block_of.size()), "vertex");
  return part.path.prefix[part.block_of[x]] + part.anchor_dist[x];
}

SpanningTree parse_tree(std::istream& in, const WeightedGraph& g) {
  SpanningTree t;
  t.n = g.vertex_count();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag != "e") throw ParseError(line_no, "expected 'e <a> <b>', got '" + line + "'");
    int a = 0, b = 0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError(line_no, "expected 'e <a> <b>'");
    auto w = a >= 0 && a < t.n && b >= 0 && b < t.n ? g.edge_weight(a, b) : std::nullopt;
    if (!w)
      throw ParseError(line_no, "tree edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is not an edge of the graph");
    t.edges.push_back(canonical_edge(a, b, *w));
  }
  std::sort(t.edges.begin(), t.edges.end(), edge_less);
  return t;
}

SpanningTree parse_tree(const std::string& text, const WeightedGraph& g) {
  std::istringstream in(text);
  return parse_tree(in, g);
}

std::string serialize_tree(const SpanningTree& t) {
  std::vector<Edge> edges(t.edges);
  std::sort(edges.begin(), edges.end(), edge_less);
  std::string out;
  for (const auto& e : edges) {
    out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  }
  return out;
}

}  // namespace dptree
