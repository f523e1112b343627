#include "dptree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace dptree {

namespace {

// C(m, k) saturating at uint64 max.
std::uint64_t binomial_saturating(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = m - k + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;  // product of i consecutive ints divides by i!
  }
  return result;
}

struct Dsu {
  std::vector<int> parent;
  std::vector<int> size;

  explicit Dsu(int n) : parent(n), size(n, 1) {
    for (int x = 0; x < n; ++x) parent[x] = x;
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  // No path compression so unions can be rolled back.
  bool unite(int a, int b, std::vector<std::pair<int, int>>& undo) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    undo.emplace_back(b, size[a]);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }

  void rollback(std::vector<std::pair<int, int>>& undo, std::size_t mark) {
    while (undo.size() > mark) {
      auto [child, old_size] = undo.back();
      undo.pop_back();
      size[parent[child]] = old_size - size[child];
      parent[child] = child;
    }
  }
};

struct TreeEnumerator {
  const WeightedGraph& g;
  const std::function<void(const SpanningTree&)>& visit;
  int n;
  int m;
  Dsu dsu;
  std::vector<std::pair<int, int>> undo;
  std::vector<Edge> chosen;
  std::uint64_t emitted = 0;

  TreeEnumerator(const WeightedGraph& graph, const std::function<void(const SpanningTree&)>& cb)
      : g(graph), visit(cb), n(graph.vertex_count()), m(graph.edge_count()), dsu(n) {}

  // Can the already-chosen edges plus edges[from..m) still connect everything?
  bool still_connectable(int from) const {
    Dsu probe(n);
    std::vector<std::pair<int, int>> scratch;
    int components = n;
    for (const auto& e : chosen) {
      if (probe.unite(e.a, e.b, scratch)) --components;
    }
    auto edges = g.edges();
    for (int i = from; i < m && components > 1; ++i) {
      if (probe.unite(edges[i].a, edges[i].b, scratch)) --components;
    }
    return components == 1;
  }

  void recurse(int idx) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      // chosen is in increasing edge-list order, which is canonical.
      ++emitted;
      visit(SpanningTree{n, chosen});
      return;
    }
    if (idx == m) return;
    if (static_cast<int>(chosen.size()) + (m - idx) < n - 1) return;

    const Edge& e = g.edges()[idx];
    std::size_t mark = undo.size();
    if (dsu.unite(e.a, e.b, undo)) {
      chosen.push_back(e);
      recurse(idx + 1);
      chosen.pop_back();
      dsu.rollback(undo, mark);
      // Skipping a non-cycle edge is only viable when the rest still connects.
      if (still_connectable(idx + 1)) recurse(idx + 1);
    } else {
      // A cycle edge can never be included; skipping it costs nothing.
      recurse(idx + 1);
    }
  }
};

}  // namespace

std::uint64_t enumerate_spanning_trees(const WeightedGraph& g,
                                       const std::function<void(const SpanningTree&)>& visit,
                                       std::uint64_t cap) {
  const int n = g.vertex_count();
  std::uint64_t bound = binomial_saturating(g.edge_count(), n - 1);
  if (bound > cap)
    throw CapExceededError("spanning tree bound C(" + std::to_string(g.edge_count()) + ", " +
                           std::to_string(n - 1) + ") = " + std::to_string(bound) +
                           " exceeds cap " + std::to_string(cap));
  TreeEnumerator enumerator(g, visit);
  enumerator.recurse(0);
  return enumerator.emitted;
}

std::vector<SpanningTree> enumerate_spanning_trees(const WeightedGraph& g, std::uint64_t cap) {
  std::vector<SpanningTree> trees;
  enumerate_spanning_trees(
      g, [&](const SpanningTree& t) { trees.push_back(t); }, cap);
  return trees;
}

BruteForceResult brute_force_common_dp_tree(const WeightedGraph& g, int u, int v,
                                            std::uint64_t cap) {
  if (u == v) throw std::invalid_argument("u and v must be distinct vertices");
  BruteForceResult result;
  result.trees_searched = enumerate_spanning_trees(
      g,
      [&](const SpanningTree& t) {
        if (!verify_dp_tree(g, t, u) && !verify_dp_tree(g, t, v)) {
          ++result.count;
          if (!result.tree) result.tree = t;
        }
      },
      cap);
  return result;
}

namespace {

// Unbiased uniform draw from [0, bound) using only the mt19937_64 stream, so
// results do not depend on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t reject_above = std::numeric_limits<std::uint64_t>::max() -
                               std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= reject_above);
  return draw % bound;
}

}  // namespace

WeightedGraph random_connected_graph(const GenSpec& spec) {
  const std::int64_t max_edges = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
  if (spec.n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (spec.m < spec.n - 1 || spec.m > max_edges)
    throw std::invalid_argument("generator needs n-1 <= m <= n(n-1)/2, got m=" +
                                std::to_string(spec.m));
  if (spec.max_weight < 1) throw std::invalid_argument("generator needs max_weight >= 1");

  std::mt19937_64 rng(spec.seed);

  // Random spanning tree: attach each vertex (in a shuffled order) to a
  // random earlier one.
  std::vector<int> perm(spec.n);
  for (int x = 0; x < spec.n; ++x) perm[x] = x;
  for (int i = spec.n - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<std::pair<int, int>> picked;
  for (int i = 1; i < spec.n; ++i) {
    int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i)));
    picked.emplace_back(std::min(perm[j], perm[i]), std::max(perm[j], perm[i]));
  }

  // Extra edges: shuffle the remaining pairs, take the first m-(n-1).
  std::vector<std::vector<bool>> used(spec.n, std::vector<bool>(spec.n, false));
  for (auto [a, b] : picked) used[a][b] = true;
  std::vector<std::pair<int, int>> rest;
  for (int a = 0; a < spec.n; ++a) {
    for (int b = a + 1; b < spec.n; ++b) {
      if (!used[a][b]) rest.emplace_back(a, b);
    }
  }
  for (std::size_t i = rest.size(); i > 1; --i) {
    std::swap(rest[i - 1], rest[uniform_below(rng, i)]);
  }
  picked.insert(picked.end(), rest.begin(), rest.begin() + (spec.m - (spec.n - 1)));

  // Weights in canonical edge order, in whole input units.
  std::sort(picked.begin(), picked.end());
  RawGraph raw;
  raw.n = spec.n;
  for (auto [a, b] : picked) {
    std::int64_t units =
        1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(spec.max_weight)));
    raw.edges.push_back({a, b, Weight::from_units(units)});
  }
  return WeightedGraph::validated(std::move(raw));
}

}  // namespace dptree
