#ifndef DPTREE_DP_TREE_HPP
#define DPTREE_DP_TREE_HPP

#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "dptree/graph.hpp"
#include "dptree/shortest_paths.hpp"

namespace dptree {

// A spanning tree is distance-preserving (DP) from a root r when every tree
// distance from r equals the graph distance. This module decides whether a
// single spanning tree can be DP from two given roots u and v at once,
// builds one when possible, and verifies candidates.
//
// The decision rests on three nested conditions:
//   (1) the shortest u-v path P = (v_0, ..., v_k) is unique;
//   (2) every vertex has a strictly unique nearest vertex on P, which
//       partitions V into blocks V_0, ..., V_k anchored at the v_i;
//   (3) every edge (x, y) crossing blocks V_i, V_j satisfies
//       w(e) >= d(v_i, v_j)  and  |d(v_i, x) - d(v_j, y)| <= w(e) - d(v_i, v_j).
// All three hold iff a common DP tree exists, and then
// E(P) + a shortest-path tree of each G[V_i] rooted at v_i is one.

// Blocks of the nearest-path-vertex partition.
struct Partition {
  PathWitness path;                    // P = v_0 .. v_k
  std::vector<int> block_of;           // per vertex: block index in 0..k
  std::vector<std::vector<int>> blocks;  // V_0 .. V_k, each ascending
  std::vector<Distance> anchor_dist;   // d(v_i, x) for x in V_i

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Condition (2) failure: a vertex equidistant from two or more path vertices.
struct TieWitness {
  int vertex = 0;
  std::vector<int> tied_anchors;  // path indices, ascending, size >= 2
  Distance distance;              // d(vertex, V(P))

  friend bool operator==(const TieWitness&, const TieWitness&) = default;
};

using PartitionResult = std::variant<Partition, TieWitness>;

// Partitions V by nearest path vertex, or reports the smallest tied vertex.
// Throws std::invalid_argument when p is not a path of g.
PartitionResult build_partition(const WeightedGraph& g, const PathWitness& p);

enum class Cond3Clause {
  kWeightClause,   // w(e) < d(v_i, v_j)
  kBalanceClause,  // |d(v_i, x) - d(v_j, y)| > w(e) - d(v_i, v_j)
};

// Condition (3) failure: the lexicographically smallest bad cross-block edge.
struct CrossEdgeWitness {
  Edge edge;  // canonical a < b
  int block_a = 0;
  int block_b = 0;
  Distance anchor_separation;  // d(v_i, v_j) along P
  Distance anchor_dist_a;      // d(v_{block_a}, a)
  Distance anchor_dist_b;      // d(v_{block_b}, b)
  Cond3Clause clause = Cond3Clause::kWeightClause;

  friend bool operator==(const CrossEdgeWitness&, const CrossEdgeWitness&) = default;
};

enum class Verdict { kPass, kFail, kNotEvaluated };

// Outcome of the three checks. Conditions are evaluated strictly in order
// (1), (2), (3) and later ones stay kNotEvaluated after a failure, since (2)
// needs the unique P and (3) needs the partition.
struct ConditionReport {
  Verdict cond1 = Verdict::kNotEvaluated;
  Verdict cond2 = Verdict::kNotEvaluated;
  Verdict cond3 = Verdict::kNotEvaluated;
  std::optional<PathWitness> path;           // set when (1) passes
  std::optional<Partition> partition;        // set when (2) passes
  std::optional<TieWitness> tie;             // set when (2) fails
  std::optional<CrossEdgeWitness> cross_edge;  // set when (3) fails

  bool overall() const {
    return cond1 == Verdict::kPass && cond2 == Verdict::kPass && cond3 == Verdict::kPass;
  }
};

// Decides the three conditions for distinct vertices u, v of a connected g.
// Throws std::invalid_argument when u == v or either id is out of range.
ConditionReport check_conditions(const WeightedGraph& g, int u, int v);

// Edge subset of g forming a spanning tree; edges carry g's weights and are
// kept in canonical sorted order.
struct SpanningTree {
  int n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws TreeError unless t has exactly n-1 edges of g (matching weights)
// that form a tree on g's vertices.
void require_spanning_tree(const WeightedGraph& g, const SpanningTree& t);

// Exact distances along the unique tree paths from root; multi is all false.
DistanceMap tree_distances(const SpanningTree& t, int root);

struct ConstructResult {
  std::optional<SpanningTree> tree;  // set iff report.overall()
  ConditionReport report;
};

// Builds the common DP tree E(P) + shortest-path trees of the G[V_i] when
// the conditions hold; otherwise returns the failing report (no common DP
// tree exists at all in that case).
ConstructResult construct_common_dp_tree(const WeightedGraph& g, int u, int v);

// First vertex (smallest id) whose tree distance from r differs from its
// graph distance.
struct VerifyFailure {
  int vertex = 0;
  Distance tree_dist;
  Distance graph_dist;

  friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

// Pass (nullopt) iff t preserves every distance from r. Throws TreeError
// when t is not a spanning tree of g.
std::optional<VerifyFailure> verify_dp_tree(const WeightedGraph& g, const SpanningTree& t, int r);

// d(u, v_i) + d(v_i, x) for x in V_i; equals the constructed tree's distance
// from u, and changes by at most w(e) across any edge when the conditions
// hold.
Distance potential(const Partition& part, int x);

// Tree file format: lines "e <a> <b>", weights looked up in the companion
// graph. Throws ParseError on syntax problems or edges absent from g.
SpanningTree parse_tree(std::istream& in, const WeightedGraph& g);
SpanningTree parse_tree(const std::string& text, const WeightedGraph& g);
std::string serialize_tree(const SpanningTree& t);

}  // namespace dptree

#endif
