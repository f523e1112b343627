#include "dptree/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace dptree {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

void check_vertex(const WeightedGraph& g, int x, const char* what) {
  if (x < 0 || x >= g.vertex_count())
    throw std::invalid_argument(std::string(what) + " " + std::to_string(x) + " out of range 0.." +
                                std::to_string(g.vertex_count() - 1));
}

}  // namespace

DistanceMap sssp(const WeightedGraph& g, int source) {
  check_vertex(g, source, "source vertex");
  const int n = g.vertex_count();

  std::vector<std::int64_t> dist(n, kUnreached);
  dist[source] = 0;
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d != dist[x]) continue;
    for (const auto& nb : g.neighbors(x)) {
      std::int64_t cand = d + nb.w.scaled();
      if (cand < dist[nb.to]) {
        dist[nb.to] = cand;
        queue.push({cand, nb.to});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (dist[x] == kUnreached)
      throw std::invalid_argument("sssp requires a connected graph; vertex " + std::to_string(x) +
                                  " is unreachable from " + std::to_string(source));
  }

  DistanceMap dm;
  dm.source = source;
  dm.dist.reserve(n);
  for (int x = 0; x < n; ++x) dm.dist.push_back(Distance::from_scaled(dist[x]));
  dm.parent.assign(n, -1);
  dm.multi.assign(n, false);

  // Tight predecessors have strictly smaller distance (weights are positive),
  // so a pass in (dist, id) order sees every predecessor finished first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return dist[x] != dist[y] ? dist[x] < dist[y] : x < y; });
  for (int x : order) {
    if (x == source) continue;
    int best = -1;
    int tight = 0;
    for (const auto& nb : g.neighbors(x)) {
      if (dist[nb.to] + nb.w.scaled() == dist[x]) {
        ++tight;
        if (best == -1 || nb.to < best) best = nb.to;
      }
    }
    dm.parent[x] = best;
    dm.multi[x] = tight >= 2 || dm.multi[best];
  }
  return dm;
}

std::optional<PathWitness> unique_shortest_path(const WeightedGraph& g, int u, int v) {
  check_vertex(g, u, "vertex u");
  check_vertex(g, v, "vertex v");
  if (u == v) throw std::invalid_argument("u and v must be distinct vertices");

  DistanceMap dm = sssp(g, u);
  if (dm.multi[v]) return std::nullopt;

  PathWitness path;
  for (int x = v; x != -1; x = dm.parent[x]) path.vertices.push_back(x);
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.prefix.reserve(path.vertices.size());
  for (int x : path.vertices) path.prefix.push_back(dm.dist[x]);
  return path;
}

SetDistance distances_from_set(const WeightedGraph& g, const std::vector<int>& anchors) {
  if (anchors.empty()) throw std::invalid_argument("distances_from_set: no anchors");
  std::set<int> distinct(anchors.begin(), anchors.end());
  if (distinct.size() != anchors.size())
    throw std::invalid_argument("distances_from_set: anchors must be distinct");
  for (int a : anchors) check_vertex(g, a, "anchor");

  // One run per anchor: the callers need per-anchor distances, not just the
  // minimum, so a multi-source pass would throw information away.
  std::vector<DistanceMap> maps;
  maps.reserve(anchors.size());
  for (int a : anchors) maps.push_back(sssp(g, a));

  const int n = g.vertex_count();
  SetDistance sd;
  sd.dist_to_set.resize(n);
  sd.nearest.resize(n);
  for (int x = 0; x < n; ++x) {
    Distance best = maps[0].dist[x];
    for (std::size_t i = 1; i < maps.size(); ++i) best = std::min(best, maps[i].dist[x]);
    sd.dist_to_set[x] = best;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (maps[i].dist[x] == best) sd.nearest[x].push_back(static_cast<int>(i));
    }
  }
  return sd;
}

}  // namespace dptree
