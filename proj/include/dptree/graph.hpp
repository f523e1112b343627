#ifndef DPTREE_GRAPH_HPP
#define DPTREE_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dptree/weight.hpp"

namespace dptree {

// Undirected edge, canonically stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Orders by endpoints only; a graph never holds two edges on the same pair.
inline bool edge_less(const Edge& x, const Edge& y) {
  return x.a != y.a ? x.a < y.a : x.b < y.b;
}

// Unvalidated graph data, exactly as read from a file or built by a caller.
struct RawGraph {
  int n = 0;
  std::vector<Edge> edges;
};

enum class ValidationCode {
  kSelfLoop,
  kParallelEdge,
  kNonpositiveWeight,
  kDisconnected,
  kBadVertexId,
  kOverflowRisk,
};

const char* to_string(ValidationCode code);

struct ValidationFailure {
  ValidationCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool ok() const { return failures.empty(); }
  bool has(ValidationCode code) const;
  std::string to_string() const;
};

// Reports every failure class present, not just the first one found.
ValidationReport validate(const RawGraph& raw);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(report.to_string()), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Simple undirected graph with exact positive weights, immutable once built.
class WeightedGraph {
 public:
  struct Neighbor {
    int to;
    Weight w;
  };

  // Validates and adopts raw data; throws ValidationError when validate()
  // reports any failure (including disconnectedness).
  static WeightedGraph validated(RawGraph raw);

  // Adopts raw data that is known simple, positively weighted and in range,
  // but possibly disconnected. Used for induced subgraphs.
  static WeightedGraph from_parts_allow_disconnected(RawGraph raw);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Canonical edge list: a < b per edge, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(int x) const;

  bool has_edge(int a, int b) const;
  // Weight of the (a, b) edge, or nullopt when absent.
  std::optional<Weight> edge_weight(int a, int b) const;

  bool connected() const;

  friend bool operator==(const WeightedGraph& x, const WeightedGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  WeightedGraph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Neighbor> adj_;
  std::vector<int> adj_start_;  // n_ + 1 offsets into adj_
};

// Reads the line-oriented graph format without semantic validation:
//   # comment
//   p dptree <n> <m>
//   e <a> <b> <w>
// Throws ParseError (with a 1-based line number) on any syntax problem.
RawGraph parse_raw_graph(std::istream& in);

// parse_raw_graph + validate; throws ValidationError when the data is
// rejected, so the result is always a connected validated graph.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);

// Canonical text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const WeightedGraph& g);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<int> to_original;    // new id -> original id, ascending
  std::vector<int> from_original;  // original id -> new id, -1 when absent
};

// G[s]: keeps exactly the edges with both ends in s. The result may be
// disconnected; callers that need connectivity check it themselves.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& s);

}  // namespace dptree

#endif
