#ifndef DPTREE_SHORTEST_PATHS_HPP
#define DPTREE_SHORTEST_PATHS_HPP

#include <optional>
#include <vector>

#include "dptree/graph.hpp"
#include "dptree/weight.hpp"

namespace dptree {

// Exact single-source shortest-path data.
//
// parent is the deterministic shortest-path tree: among all predecessors y
// with dist[y] + w(y, x) == dist[x], the one with the smallest id. multi[x]
// says whether more than one shortest path from the source reaches x; it is
// propagated saturatingly (two tight predecessors, or a tight predecessor
// that is itself multi), so no path counting that could overflow.
struct DistanceMap {
  int source = 0;
  std::vector<Distance> dist;
  std::vector<int> parent;  // -1 at the source
  std::vector<bool> multi;
};

DistanceMap sssp(const WeightedGraph& g, int source);

// The unique shortest u-v path (u = v_0, ..., v_k = v) with prefix distances
// prefix[i] = d(v_0, v_i).
struct PathWitness {
  std::vector<int> vertices;
  std::vector<Distance> prefix;

  Distance length() const { return prefix.back(); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

// Unique shortest path between distinct u and v, or nullopt when two or more
// shortest u-v paths exist.
std::optional<PathWitness> unique_shortest_path(const WeightedGraph& g, int u, int v);

// Per-vertex distance to an anchor set, with every anchor index attaining
// the minimum (ties matter to the callers).
struct SetDistance {
  std::vector<Distance> dist_to_set;
  std::vector<std::vector<int>> nearest;  // ascending anchor indices
};

SetDistance distances_from_set(const WeightedGraph& g, const std::vector<int>& anchors);

}  // namespace dptree

#endif
