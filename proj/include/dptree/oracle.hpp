#ifndef DPTREE_ORACLE_HPP
#define DPTREE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dptree/dp_tree.hpp"
#include "dptree/graph.hpp"

namespace dptree {

// Independent ground truth for the common-DP-tree question: enumerate every
// spanning tree and test each one directly. Intended for small instances.

inline constexpr std::uint64_t kDefaultTreeCap = 10'000'000;

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Calls visit once per spanning tree of g, each exactly once, in a canonical
// deterministic order (include/exclude recursion over the sorted edge list,
// include first). Returns the number of trees. Throws CapExceededError when
// the cheap bound C(m, n-1) on the tree count exceeds cap.
std::uint64_t enumerate_spanning_trees(const WeightedGraph& g,
                                       const std::function<void(const SpanningTree&)>& visit,
                                       std::uint64_t cap = kDefaultTreeCap);

// Materialized variant, for instances known to be small.
std::vector<SpanningTree> enumerate_spanning_trees(const WeightedGraph& g,
                                                   std::uint64_t cap = kDefaultTreeCap);

struct BruteForceResult {
  std::optional<SpanningTree> tree;  // first common DP tree in canonical order
  std::uint64_t count = 0;           // total number of common DP trees
  std::uint64_t trees_searched = 0;  // spanning trees examined

  bool found() const { return tree.has_value(); }
};

// Scans every spanning tree and keeps those that are distance-preserving
// from both u and v (verify_dp_tree passes for both roots).
BruteForceResult brute_force_common_dp_tree(const WeightedGraph& g, int u, int v,
                                            std::uint64_t cap = kDefaultTreeCap);

struct GenSpec {
  int n = 2;
  int m = 1;
  std::int64_t max_weight = 1;  // input units; weights drawn from [1, max_weight]
  std::uint64_t seed = 0;
};

// Deterministic seeded instance: a random spanning tree plus m-(n-1)
// distinct extra edges, integer weights uniform in [1, max_weight]. The same
// spec always yields the same graph, independent of platform.
WeightedGraph random_connected_graph(const GenSpec& spec);

}  // namespace dptree

#endif
