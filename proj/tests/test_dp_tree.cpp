#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dptree/dp_tree.hpp"
#include "dptree/oracle.hpp"
#include "support/instances.hpp"

using namespace dptree;

namespace {

SpanningTree tree_of(const WeightedGraph& g,
                     const std::vector<std::pair<int, int>>& edges) {
  SpanningTree t;
  t.n = g.vertex_count();
  for (auto [a, b] : edges) t.edges.push_back({a, b, *g.edge_weight(a, b)});
  return t;
}

}  // namespace

TEST_CASE("triangle from adjacent roots: apex is torn between them") {
  const auto g = testsupport::instance_a();
  const auto rep = check_conditions(g, 0, 1);
  CHECK(rep.cond1 == Verdict::kPass);
  REQUIRE(rep.path);
  CHECK(rep.path->vertices == std::vector<int>{0, 1});
  CHECK(rep.cond2 == Verdict::kFail);
  CHECK(rep.cond3 == Verdict::kNotEvaluated);
  CHECK(!rep.overall());
  REQUIRE(rep.tie);
  CHECK(rep.tie->vertex == 2);
  CHECK(rep.tie->tied_anchors == std::vector<int>{0, 1});
  CHECK(rep.tie->distance == Weight::from_units(1));
  CHECK(!rep.partition);

  const auto built = construct_common_dp_tree(g, 0, 1);
  CHECK(!built.tree);
  CHECK(built.report.cond2 == Verdict::kFail);
}

TEST_CASE("4-cycle from opposite corners: no unique shortest path") {
  const auto rep = check_conditions(testsupport::instance_b(), 0, 2);
  CHECK(rep.cond1 == Verdict::kFail);
  CHECK(rep.cond2 == Verdict::kNotEvaluated);
  CHECK(rep.cond3 == Verdict::kNotEvaluated);
  CHECK(!rep.path);
  CHECK(!rep.overall());
}

TEST_CASE("positive instance: full report and construction") {
  const auto g = testsupport::instance_c();
  const auto rep = check_conditions(g, 0, 2);
  CHECK(rep.overall());
  REQUIRE(rep.path);
  CHECK(rep.path->vertices == std::vector<int>{0, 1, 2});
  CHECK(rep.path->prefix ==
        std::vector<Distance>{Weight::from_units(0), Weight::from_units(2),
                              Weight::from_units(4)});
  REQUIRE(rep.partition);
  CHECK(rep.partition->block_of == std::vector<int>{0, 1, 2, 1});
  CHECK(rep.partition->blocks ==
        std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  CHECK(rep.partition->anchor_dist ==
        std::vector<Distance>{Weight::from_units(0), Weight::from_units(0),
                              Weight::from_units(0), Weight::from_units(2)});

  const auto built = construct_common_dp_tree(g, 0, 2);
  REQUIRE(built.tree);
  CHECK(*built.tree == tree_of(g, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(!verify_dp_tree(g, *built.tree, 0));
  CHECK(!verify_dp_tree(g, *built.tree, 2));
  // this particular tree even preserves distances from the middle vertex
  CHECK(!verify_dp_tree(g, *built.tree, 1));
}

TEST_CASE("lightened chord breaks the balance inequality") {
  const auto g = testsupport::instance_d();
  const auto rep = check_conditions(g, 0, 2);
  CHECK(rep.cond1 == Verdict::kPass);
  CHECK(rep.cond2 == Verdict::kPass);
  CHECK(rep.cond3 == Verdict::kFail);
  CHECK(!rep.overall());
  REQUIRE(rep.cross_edge);
  const auto& w = *rep.cross_edge;
  CHECK(w.edge.a == 0);
  CHECK(w.edge.b == 3);
  CHECK(w.edge.w == Weight::from_units(3));
  CHECK(w.block_a == 0);
  CHECK(w.block_b == 1);
  CHECK(w.anchor_separation == Weight::from_units(2));
  CHECK(w.anchor_dist_a == Weight::from_units(0));
  CHECK(w.anchor_dist_b == Weight::from_units(2));
  CHECK(w.clause == Cond3Clause::kBalanceClause);
  // the reported numbers recheck the violated inequality:
  // |0 - 2| > 3 - 2
  CHECK(abs_diff(w.anchor_dist_a, w.anchor_dist_b) >
        w.edge.w - w.anchor_separation);
}

TEST_CASE("too-light cycle edge fails the weight clause") {
  const auto g = testsupport::instance_e();
  const auto rep = check_conditions(g, 0, 2);
  CHECK(rep.cond1 == Verdict::kPass);
  REQUIRE(rep.path);
  CHECK(rep.path->vertices == std::vector<int>{0, 1, 2});
  CHECK(rep.cond2 == Verdict::kPass);
  REQUIRE(rep.partition);
  CHECK(rep.partition->block_of == std::vector<int>{0, 1, 2, 0, 2});
  CHECK(rep.cond3 == Verdict::kFail);
  REQUIRE(rep.cross_edge);
  CHECK(rep.cross_edge->edge.a == 3);
  CHECK(rep.cross_edge->edge.b == 4);
  CHECK(rep.cross_edge->clause == Cond3Clause::kWeightClause);
  CHECK(rep.cross_edge->anchor_separation == Weight::from_units(6));
  CHECK(rep.cross_edge->edge.w < rep.cross_edge->anchor_separation);
}

TEST_CASE("partition construction and its tie witness") {
  const auto c = testsupport::instance_c();
  const auto p = unique_shortest_path(c, 0, 2);
  REQUIRE(p);
  const auto res = build_partition(c, *p);
  REQUIRE(std::holds_alternative<Partition>(res));
  const auto& part = std::get<Partition>(res);
  CHECK(part.path == *p);
  CHECK(part.blocks.size() == 3);

  const auto a = testsupport::instance_a();
  const auto pa = unique_shortest_path(a, 0, 1);
  REQUIRE(pa);
  const auto ra = build_partition(a, *pa);
  REQUIRE(std::holds_alternative<TieWitness>(ra));
  CHECK(std::get<TieWitness>(ra).vertex == 2);

  // every vertex of a shortest path anchors itself
  const auto path3 = testsupport::make_graph(3, {{0, 1, 3}, {1, 2, 3}});
  const auto pp = unique_shortest_path(path3, 0, 2);
  REQUIRE(pp);
  const auto rp = build_partition(path3, *pp);
  REQUIRE(std::holds_alternative<Partition>(rp));
  CHECK(std::get<Partition>(rp).blocks ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("partition rejects sequences that are not paths of the graph") {
  const auto c = testsupport::instance_c();
  PathWitness bad;
  bad.vertices = {0, 2};  // not an edge
  bad.prefix = {Weight::from_units(0), Weight::from_units(4)};
  CHECK_THROWS_AS(build_partition(c, bad), std::invalid_argument);

  PathWitness off;
  off.vertices = {0, 1};
  off.prefix = {Weight::from_units(0), Weight::from_units(3)};  // weight is 2
  CHECK_THROWS_AS(build_partition(c, off), std::invalid_argument);

  PathWitness rep;
  rep.vertices = {0, 1, 0};
  rep.prefix = {Weight::from_units(0), Weight::from_units(2),
                Weight::from_units(4)};
  CHECK_THROWS_AS(build_partition(c, rep), std::invalid_argument);

  PathWitness empty;
  CHECK_THROWS_AS(build_partition(c, empty), std::invalid_argument);
}

TEST_CASE("constructing on a tree returns that tree") {
  const auto path5 = testsupport::unit_path(5);
  const auto r1 = construct_common_dp_tree(path5, 0, 4);
  REQUIRE(r1.tree);
  CHECK(r1.tree->edges.size() == 4);
  CHECK(*r1.tree == tree_of(path5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));

  const auto star = testsupport::unit_star(4);
  const auto r2 = construct_common_dp_tree(star, 1, 2);
  REQUIRE(r2.tree);
  CHECK(*r2.tree ==
        tree_of(star, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST_CASE("verification pinpoints the smallest broken vertex") {
  const auto g = testsupport::instance_c();
  const auto good = tree_of(g, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(!verify_dp_tree(g, good, 0));

  const auto detour = tree_of(g, {{0, 1}, {1, 2}, {0, 3}});
  const auto f0 = verify_dp_tree(g, detour, 0);
  REQUIRE(f0);
  CHECK(*f0 == VerifyFailure{3, Weight::from_units(5), Weight::from_units(4)});
  const auto f2 = verify_dp_tree(g, detour, 2);
  REQUIRE(f2);
  CHECK(*f2 == VerifyFailure{3, Weight::from_units(9), Weight::from_units(4)});
}

TEST_CASE("verification refuses non-trees") {
  const auto g = testsupport::instance_c();
  CHECK_THROWS_AS(verify_dp_tree(g, tree_of(g, {{0, 1}, {1, 2}}), 0),
                  TreeError);
  CHECK_THROWS_AS(
      verify_dp_tree(g, tree_of(g, {{0, 1}, {1, 3}, {0, 3}}), 0),
      TreeError);  // cycle on {0, 1, 3}, vertex 2 stranded
  SpanningTree alien;
  alien.n = 4;
  alien.edges = {{0, 1, Weight::from_units(2)},
                 {1, 2, Weight::from_units(2)},
                 {0, 2, Weight::from_units(1)}};  // (0, 2) not in g
  CHECK_THROWS_AS(verify_dp_tree(g, alien, 0), TreeError);
  SpanningTree reweighted;
  reweighted.n = 4;
  reweighted.edges = {{0, 1, Weight::from_units(9)},
                      {1, 2, Weight::from_units(2)},
                      {1, 3, Weight::from_units(2)}};
  CHECK_THROWS_AS(verify_dp_tree(g, reweighted, 0), TreeError);
  SpanningTree wrong_n;
  wrong_n.n = 3;
  wrong_n.edges = {{0, 1, Weight::from_units(2)},
                   {1, 2, Weight::from_units(2)}};
  CHECK_THROWS_AS(verify_dp_tree(g, wrong_n, 0), TreeError);
}

TEST_CASE("tree distances walk the unique paths") {
  const auto g = testsupport::instance_c();
  const auto t = tree_of(g, {{0, 1}, {1, 2}, {1, 3}});
  const auto d = tree_distances(t, 0);
  CHECK(d.dist == std::vector<Distance>{
            Weight::from_units(0), Weight::from_units(2),
            Weight::from_units(4), Weight::from_units(4)});
  CHECK(d.parent == std::vector<int>{-1, 0, 1, 1});
  CHECK(d.multi == std::vector<bool>{false, false, false, false});

  const auto d2 = tree_distances(t, 3);
  CHECK(d2.dist[0] == Weight::from_units(4));
  CHECK(d2.dist[2] == Weight::from_units(4));

  SpanningTree torn;
  torn.n = 4;
  torn.edges = {{0, 1, Weight::from_units(1)}, {2, 3, Weight::from_units(1)}};
  CHECK_THROWS_AS(tree_distances(torn, 0), TreeError);
}

TEST_CASE("potential interpolates distance from the first root") {
  const auto g = testsupport::instance_c();
  const auto rep = check_conditions(g, 0, 2);
  REQUIRE(rep.partition);
  const auto& part = *rep.partition;
  CHECK(potential(part, 0) == Weight::from_units(0));
  CHECK(potential(part, 1) == Weight::from_units(2));
  CHECK(potential(part, 2) == Weight::from_units(4));
  CHECK(potential(part, 3) == Weight::from_units(4));
  for (const auto& e : g.edges())
    CHECK(abs_diff(potential(part, e.a), potential(part, e.b)) <= e.w);
}

TEST_CASE("degenerate queries are rejected") {
  const auto g = testsupport::instance_c();
  CHECK_THROWS_AS(check_conditions(g, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_conditions(g, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_conditions(g, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(construct_common_dp_tree(g, 2, 2), std::invalid_argument);
}

TEST_CASE("tree files parse against their graph") {
  const auto g = testsupport::instance_c();
  const auto t = parse_tree("# built by hand\ne 0 1\n\ne 1 2\ne 1 3\n", g);
  CHECK(t == tree_of(g, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(serialize_tree(t) == "e 0 1\ne 1 2\ne 1 3\n");

  CHECK_THROWS_AS(parse_tree("e 0 2\n", g), ParseError);   // not an edge of g
  CHECK_THROWS_AS(parse_tree("e 0\n", g), ParseError);
  CHECK_THROWS_AS(parse_tree("e 0 1 2\n", g), ParseError);
  CHECK_THROWS_AS(parse_tree("x 0 1\n", g), ParseError);
}

TEST_CASE("construction satisfies the structural promises on random graphs") {
  std::mt19937_64 rng(424242);
  int positives = 0;
  for (int iter = 0; iter < 300; ++iter) {
    GenSpec spec;
    spec.n = 3 + static_cast<int>(rng() % 5);
    const int max_m = spec.n * (spec.n - 1) / 2;
    spec.m = spec.n - 1 +
             static_cast<int>(rng() % static_cast<std::uint64_t>(
                                  max_m - spec.n + 2));
    const std::int64_t weights[] = {1, 3, 8};
    spec.max_weight = weights[rng() % 3];
    spec.seed = rng();
    const auto g = random_connected_graph(spec);
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(spec.n));
    int v = u;
    while (v == u)
      v = static_cast<int>(rng() % static_cast<std::uint64_t>(spec.n));

    const auto built = construct_common_dp_tree(g, u, v);
    CHECK(built.tree.has_value() == built.report.overall());
    if (!built.tree) continue;
    ++positives;
    REQUIRE(built.report.partition);
    const auto& part = *built.report.partition;

    // blocks partition the vertex set
    std::vector<int> seen(static_cast<std::size_t>(spec.n), 0);
    for (const auto& blk : part.blocks)
      for (int x : blk) ++seen[static_cast<std::size_t>(x)];
    CHECK(std::all_of(seen.begin(), seen.end(),
                      [](int c) { return c == 1; }));

    // each block induces a connected subgraph in which the anchor reaches
    // every member at its global distance
    const auto global = sssp(g, u);
    for (std::size_t i = 0; i < part.blocks.size(); ++i) {
      const auto sub = induced_subgraph(g, part.blocks[i]);
      REQUIRE(sub.graph.connected());
      const int anchor = part.path.vertices[i];
      const auto local = sssp(sub.graph, sub.from_original[anchor]);
      for (int x : part.blocks[i]) {
        CHECK(local.dist[sub.from_original[x]] ==
              part.anchor_dist[static_cast<std::size_t>(x)]);
      }
    }

    // the potential is 1-Lipschitz across every edge
    for (const auto& e : g.edges())
      CHECK(abs_diff(potential(part, e.a), potential(part, e.b)) <= e.w);

    // and the built tree really preserves distances from both roots
    CHECK(!verify_dp_tree(g, *built.tree, u));
    CHECK(!verify_dp_tree(g, *built.tree, v));
  }
  CHECK(positives > 10);  // the stream must actually exercise the builder
}
