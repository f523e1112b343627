#include "dptree/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace dptree {

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kSelfLoop: return "SELF_LOOP";
    case ValidationCode::kParallelEdge: return "PARALLEL_EDGE";
    case ValidationCode::kNonpositiveWeight: return "NONPOSITIVE_WEIGHT";
    case ValidationCode::kDisconnected: return "DISCONNECTED";
    case ValidationCode::kBadVertexId: return "BAD_VERTEX_ID";
    case ValidationCode::kOverflowRisk: return "OVERFLOW_RISK";
  }
  return "UNKNOWN";
}

bool ValidationReport::has(ValidationCode code) const {
  for (const auto& f : failures) {
    if (f.code == code) return true;
  }
  return false;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out = "invalid graph:";
  for (const auto& f : failures) {
    out += "\n  [";
    out += dptree::to_string(f.code);
    out += "] ";
    out += f.message;
  }
  return out;
}

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
}

bool in_range(const Edge& e, int n) {
  return e.a >= 0 && e.a < n && e.b >= 0 && e.b < n;
}

// true iff every vertex is reachable from vertex 0 over the given edges;
// edges with out-of-range endpoints are ignored.
bool reaches_all(int n, const std::vector<Edge>& edges) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    if (!in_range(e, n) || e.a == e.b) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

}  // namespace

ValidationReport validate(const RawGraph& raw) {
  ValidationReport report;
  auto fail = [&](ValidationCode code, std::string message) {
    report.failures.push_back({code, std::move(message)});
  };

  if (raw.n < 1) {
    fail(ValidationCode::kBadVertexId, "graph needs at least one vertex, got n=" + std::to_string(raw.n));
    return report;
  }

  std::set<std::pair<int, int>> seen;
  std::int64_t max_scaled = 0;
  for (const auto& e : raw.edges) {
    if (!in_range(e, raw.n)) {
      fail(ValidationCode::kBadVertexId,
           "edge " + edge_name(e) + " has an endpoint outside 0.." + std::to_string(raw.n - 1));
      continue;
    }
    if (e.a == e.b) {
      fail(ValidationCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.a));
      continue;
    }
    auto key = std::minmax(e.a, e.b);
    if (!seen.insert(key).second) {
      fail(ValidationCode::kParallelEdge, "duplicate edge " + edge_name(e));
    }
    if (e.w.scaled() <= 0) {
      fail(ValidationCode::kNonpositiveWeight,
           "edge " + edge_name(e) + " has weight " + e.w.to_string() + "; weights must be > 0");
    }
    max_scaled = std::max(max_scaled, e.w.scaled());
  }

  // Path lengths sum at most n-1 edges and totals sum at most m edges; both
  // must stay exact in 64 bits, otherwise the input is rejected.
  if (max_scaled > 0) {
    std::int64_t limit = std::numeric_limits<std::int64_t>::max() / max_scaled;
    std::int64_t terms = std::max<std::int64_t>(raw.n, static_cast<std::int64_t>(raw.edges.size()));
    if (terms > limit) {
      fail(ValidationCode::kOverflowRisk,
           "sums of up to " + std::to_string(terms) + " weights of " +
               Weight::from_scaled(max_scaled).to_string() + " exceed the exact 64-bit range");
    }
  }

  if (!reaches_all(raw.n, raw.edges)) {
    fail(ValidationCode::kDisconnected, "graph is not connected");
  }
  return report;
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges_.begin(), edges_.end(), edge_less);

  std::vector<int> degree(n_, 0);
  for (const auto& e : edges_) {
    ++degree[e.a];
    ++degree[e.b];
  }
  adj_start_.assign(n_ + 1, 0);
  for (int x = 0; x < n_; ++x) adj_start_[x + 1] = adj_start_[x] + degree[x];
  adj_.resize(adj_start_[n_]);
  std::vector<int> cursor(adj_start_.begin(), adj_start_.end() - 1);
  for (const auto& e : edges_) {
    adj_[cursor[e.a]++] = {e.b, e.w};
    adj_[cursor[e.b]++] = {e.a, e.w};
  }
  // Neighbor lists come out sorted by id because the edge list is sorted.
  for (int x = 0; x < n_; ++x) {
    std::sort(adj_.begin() + adj_start_[x], adj_.begin() + adj_start_[x + 1],
              [](const Neighbor& p, const Neighbor& q) { return p.to < q.to; });
  }
}

WeightedGraph WeightedGraph::validated(RawGraph raw) {
  ValidationReport report = validate(raw);
  if (!report.ok()) throw ValidationError(std::move(report));
  return WeightedGraph(raw.n, std::move(raw.edges));
}

WeightedGraph WeightedGraph::from_parts_allow_disconnected(RawGraph raw) {
  ValidationReport report = validate(raw);
  bool only_disconnected = std::all_of(
      report.failures.begin(), report.failures.end(),
      [](const ValidationFailure& f) { return f.code == ValidationCode::kDisconnected; });
  if (!only_disconnected) throw ValidationError(std::move(report));
  return WeightedGraph(raw.n, std::move(raw.edges));
}

std::span<const WeightedGraph::Neighbor> WeightedGraph::neighbors(int x) const {
  return {adj_.data() + adj_start_[x], adj_.data() + adj_start_[x + 1]};
}

std::optional<Weight> WeightedGraph::edge_weight(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  for (const auto& nb : neighbors(a)) {
    if (nb.to == b) return nb.w;
  }
  return std::nullopt;
}

bool WeightedGraph::has_edge(int a, int b) const { return edge_weight(a, b).has_value(); }

bool WeightedGraph::connected() const { return reaches_all(n_, edges_); }

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string field;
  while (ss >> field) fields.push_back(field);
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  long long value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    value = value * 10 + (s[i] - '0');
    if (value > std::numeric_limits<int>::max()) return false;
  }
  out = static_cast<int>(s[0] == '-' ? -value : value);
  return true;
}

}  // namespace

RawGraph parse_raw_graph(std::istream& in) {
  RawGraph raw;
  bool have_header = false;
  int expected_edges = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header line");
      if (fields.size() != 4 || fields[1] != "dptree")
        throw ParseError(line_no, "expected header 'p dptree <n> <m>'");
      if (!parse_int(fields[2], raw.n) || raw.n < 1)
        throw ParseError(line_no, "bad vertex count '" + fields[2] + "'");
      if (!parse_int(fields[3], expected_edges) || expected_edges < 0)
        throw ParseError(line_no, "bad edge count '" + fields[3] + "'");
      have_header = true;
      continue;
    }
    if (fields[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before the 'p dptree' header");
      if (fields.size() != 4) throw ParseError(line_no, "expected 'e <a> <b> <w>'");
      Edge e;
      if (!parse_int(fields[1], e.a)) throw ParseError(line_no, "bad vertex id '" + fields[1] + "'");
      if (!parse_int(fields[2], e.b)) throw ParseError(line_no, "bad vertex id '" + fields[2] + "'");
      auto w = Weight::parse(fields[3]);
      if (!w)
        throw ParseError(line_no, "bad weight '" + fields[3] +
                                      "' (positive decimal, at most 9 fractional digits)");
      e.w = *w;
      raw.edges.push_back(e);
      if (static_cast<int>(raw.edges.size()) > expected_edges)
        throw ParseError(line_no, "more edge lines than the header's m=" + std::to_string(expected_edges));
      continue;
    }
    throw ParseError(line_no, "unrecognized line '" + line + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'p dptree <n> <m>' header");
  if (static_cast<int>(raw.edges.size()) != expected_edges)
    throw ParseError(line_no, "expected " + std::to_string(expected_edges) + " edge lines, got " +
                                  std::to_string(raw.edges.size()));
  return raw;
}

WeightedGraph parse_graph(std::istream& in) { return WeightedGraph::validated(parse_raw_graph(in)); }

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "p dptree " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + " " + e.w.to_string() + "\n";
  }
  return out;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: vertex set is empty");
  std::vector<int> to_original(s);
  std::sort(to_original.begin(), to_original.end());
  to_original.erase(std::unique(to_original.begin(), to_original.end()), to_original.end());
  if (to_original.front() < 0 || to_original.back() >= g.vertex_count())
    throw std::invalid_argument("induced_subgraph: vertex id out of range");

  std::vector<int> from_original(g.vertex_count(), -1);
  for (std::size_t i = 0; i < to_original.size(); ++i) from_original[to_original[i]] = static_cast<int>(i);

  RawGraph raw;
  raw.n = static_cast<int>(to_original.size());
  for (const auto& e : g.edges()) {
    if (from_original[e.a] >= 0 && from_original[e.b] >= 0) {
      raw.edges.push_back({from_original[e.a], from_original[e.b], e.w});
    }
  }
  return {WeightedGraph::from_parts_allow_disconnected(std::move(raw)), std::move(to_original),
          std::move(from_original)};
}

}  // namespace dptree
