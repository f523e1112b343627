#include <limits>
#include <sstream>

#include "doctest.h"
#include "dptree/graph.hpp"
#include "dptree/oracle.hpp"
#include "support/instances.hpp"

using namespace dptree;
using testsupport::make_graph;

TEST_CASE("graph text parses into canonical form") {
  const auto g = parse_graph("p dptree 2 1\ne 0 1 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edges()[0].a == 0);
  CHECK(g.edges()[0].b == 1);
  CHECK(g.edges()[0].w == Weight::from_units(1));

  const auto tri = parse_graph(
      "# a comment\n"
      "p dptree 3 3\n"
      "\n"
      "e 1 0 1\n"
      "e 2 1 1\n"
      "e 0 2 1\n");
  CHECK(tri == testsupport::unit_triangle());

  const auto c = parse_graph(
      "p dptree 4 4\ne 0 1 2\ne 1 2 2\ne 1 3 2\ne 0 3 5\n");
  CHECK(c == testsupport::instance_c());
}

TEST_CASE("parser reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("e 0 1 1\n") == 1);                     // edge before header
  CHECK(line_of("p dptree x 1\ne 0 1 1\n") == 1);       // bad header field
  CHECK(line_of("p dptree 2 1\ne 0 1\n") == 2);         // missing weight
  CHECK(line_of("p dptree 2 1\ne 0 1 1 9\n") == 2);     // trailing token
  CHECK(line_of("p dptree 2 1\ne 0 1 1.0000000001\n") == 2);
  CHECK(line_of("p dptree 2 1\nq 0 1 1\n") == 2);       // unknown record
  CHECK_THROWS_AS(parse_graph("p dptree 2 2\ne 0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p dptree 2 1\ne 0 1 1\ne 0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p dptree 2 1\ne 0 1 1\np dptree 2 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("validation flags each failure class") {
  auto codes_of = [](RawGraph raw) {
    return validate(raw);
  };

  RawGraph loop{2, {{0, 0, Weight::from_units(1)},
                    {0, 1, Weight::from_units(1)}}};
  CHECK(codes_of(loop).has(ValidationCode::kSelfLoop));

  RawGraph dup{2, {{0, 1, Weight::from_units(1)},
                   {1, 0, Weight::from_units(2)}}};
  CHECK(codes_of(dup).has(ValidationCode::kParallelEdge));

  RawGraph zero{2, {{0, 1, Weight::from_scaled(0)}}};
  CHECK(codes_of(zero).has(ValidationCode::kNonpositiveWeight));

  RawGraph split{4, {{0, 1, Weight::from_units(1)},
                     {2, 3, Weight::from_units(1)}}};
  CHECK(codes_of(split).has(ValidationCode::kDisconnected));

  RawGraph badid{2, {{0, 2, Weight::from_units(1)}}};
  CHECK(codes_of(badid).has(ValidationCode::kBadVertexId));

  // A 10-vertex path with one near-maximal weight: 10 accumulation terms
  // can overflow, so it must be refused up front.
  RawGraph big;
  big.n = 10;
  for (int i = 0; i + 1 < 10; ++i)
    big.edges.push_back({i, i + 1, Weight::from_units(1)});
  big.edges[0].w =
      Weight::from_scaled(std::numeric_limits<std::int64_t>::max() / 5);
  const auto rep = codes_of(big);
  CHECK(rep.has(ValidationCode::kOverflowRisk));
  CHECK(!rep.has(ValidationCode::kDisconnected));

  RawGraph fine{3, {{0, 1, Weight::from_units(1)},
                    {1, 2, Weight::from_units(1)}}};
  CHECK(codes_of(fine).ok());

  CHECK_THROWS_AS(WeightedGraph::validated(split), ValidationError);
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize_graph(parse_graph("p dptree 2 1\ne 1 0 1\n")) ==
        "p dptree 2 1\ne 0 1 1\n");
  CHECK(serialize_graph(testsupport::unit_triangle()) ==
        "p dptree 3 3\ne 0 1 1\ne 0 2 1\ne 1 2 1\n");
  CHECK(serialize_graph(parse_graph("p dptree 2 1\ne 0 1 1.5\n")) ==
        "p dptree 2 1\ne 0 1 1.5\n");
}

TEST_CASE("parse of serialize is the identity on random graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenSpec spec;
    spec.n = 2 + static_cast<int>(seed % 6);
    spec.m = spec.n - 1 + static_cast<int>(seed % 3);
    const int max_m = spec.n * (spec.n - 1) / 2;
    if (spec.m > max_m) spec.m = max_m;
    spec.max_weight = 7;
    spec.seed = seed;
    const auto g = random_connected_graph(spec);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("adjacency mirrors the edge list") {
  const auto g = testsupport::instance_c();
  for (const auto& e : g.edges()) {
    CHECK(g.has_edge(e.a, e.b));
    CHECK(g.has_edge(e.b, e.a));
    CHECK(g.edge_weight(e.a, e.b) == e.w);
    CHECK(g.edge_weight(e.b, e.a) == e.w);
  }
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.edge_weight(0, 2).has_value());
  int degree_sum = 0;
  for (int x = 0; x < g.vertex_count(); ++x)
    degree_sum += static_cast<int>(g.neighbors(x).size());
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("induced subgraphs relabel consistently") {
  const auto tri = testsupport::unit_triangle();
  const auto sub = induced_subgraph(tri, {0, 1});
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.to_original == std::vector<int>{0, 1});

  const auto c = testsupport::instance_c();
  const auto mid = induced_subgraph(c, {3, 1});  // order does not matter
  CHECK(mid.graph.vertex_count() == 2);
  CHECK(mid.graph.edges()[0].w == Weight::from_units(2));
  CHECK(mid.to_original == std::vector<int>{1, 3});
  CHECK(mid.from_original[1] == 0);
  CHECK(mid.from_original[3] == 1);
  CHECK(mid.from_original[0] == -1);

  std::vector<int> all{0, 1, 2, 3};
  CHECK(induced_subgraph(c, all).graph == c);

  // Opposite corners of a 4-cycle induce no edges at all.
  const auto corners = induced_subgraph(testsupport::unit_c4(), {0, 2});
  CHECK(corners.graph.edge_count() == 0);
  CHECK(!corners.graph.connected());

  CHECK_THROWS_AS(induced_subgraph(tri, {}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(tri, {0, 7}), std::invalid_argument);
}
