#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "dptree/dp_tree.hpp"
#include "dptree/graph.hpp"
#include "dptree/oracle.hpp"
#include "dptree/shortest_paths.hpp"
#include "dptree/weight.hpp"

namespace py = pybind11;
using namespace dptree;

namespace {

std::string weight_repr(const Weight& w) {
  return "Weight('" + w.to_string() + "')";
}

std::string edge_repr(const Edge& e) {
  std::ostringstream os;
  os << "Edge(" << e.a << ", " << e.b << ", '" << e.w.to_string() << "')";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_dptree, m) {
  m.doc() = "Distance preserving spanning trees from two roots";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<TreeError>(m, "TreeError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<Weight>(m, "Weight")
      .def(py::init([](const std::string& text) {
             auto w = Weight::parse(text);
             if (!w) throw py::value_error("bad weight: " + text);
             return *w;
           }),
           py::arg("text"))
      .def_static("from_units", &Weight::from_units, py::arg("units"))
      .def_static("from_scaled", &Weight::from_scaled, py::arg("scaled"))
      .def_property_readonly("scaled", &Weight::scaled)
      .def("__str__", &Weight::to_string)
      .def("__repr__", &weight_repr)
      .def("__hash__", [](const Weight& w) { return py::hash(py::int_(w.scaled())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self);
  m.def("abs_diff", &abs_diff, py::arg("a"), py::arg("b"));

  py::class_<Edge>(m, "Edge")
      .def(py::init([](int a, int b, const Weight& w) {
             return Edge{a, b, w};
           }),
           py::arg("a"), py::arg("b"), py::arg("w"))
      .def_readonly("a", &Edge::a)
      .def_readonly("b", &Edge::b)
      .def_readonly("w", &Edge::w)
      .def("__repr__", &edge_repr)
      .def(py::self == py::self);

  py::enum_<ValidationCode>(m, "ValidationCode")
      .value("SELF_LOOP", ValidationCode::kSelfLoop)
      .value("PARALLEL_EDGE", ValidationCode::kParallelEdge)
      .value("NONPOSITIVE_WEIGHT", ValidationCode::kNonpositiveWeight)
      .value("DISCONNECTED", ValidationCode::kDisconnected)
      .value("BAD_VERTEX_ID", ValidationCode::kBadVertexId)
      .value("OVERFLOW_RISK", ValidationCode::kOverflowRisk);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def_property_readonly("n", &WeightedGraph::vertex_count)
      .def_property_readonly("m", &WeightedGraph::edge_count)
      .def_property_readonly("edges",
                             [](const WeightedGraph& g) {
                               return std::vector<Edge>(g.edges().begin(),
                                                        g.edges().end());
                             })
      .def("neighbors",
           [](const WeightedGraph& g, int x) {
             std::vector<std::pair<int, Weight>> out;
             for (const auto& nb : g.neighbors(x)) out.emplace_back(nb.to, nb.w);
             return out;
           },
           py::arg("x"))
      .def("has_edge", &WeightedGraph::has_edge, py::arg("a"), py::arg("b"))
      .def("edge_weight", &WeightedGraph::edge_weight, py::arg("a"), py::arg("b"))
      .def("connected", &WeightedGraph::connected)
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedGraph& g) {
        std::ostringstream os;
        os << "WeightedGraph(n=" << g.vertex_count() << ", m=" << g.edge_count()
           << ")";
        return os.str();
      });

  py::class_<InducedSubgraph>(m, "InducedSubgraph")
      .def_readonly("graph", &InducedSubgraph::graph)
      .def_readonly("to_original", &InducedSubgraph::to_original)
      .def_readonly("from_original", &InducedSubgraph::from_original);

  m.def("parse_graph",
        [](const std::string& text) { return parse_graph(text); },
        py::arg("text"), "Parse the textual graph format.");
  m.def("serialize_graph", &serialize_graph, py::arg("g"));
  m.def("induced_subgraph", &induced_subgraph, py::arg("g"), py::arg("vertices"));

  py::class_<DistanceMap>(m, "DistanceMap")
      .def_readonly("source", &DistanceMap::source)
      .def_readonly("dist", &DistanceMap::dist)
      .def_readonly("parent", &DistanceMap::parent)
      .def_readonly("multi", &DistanceMap::multi);

  py::class_<PathWitness>(m, "PathWitness")
      .def_readonly("vertices", &PathWitness::vertices)
      .def_readonly("prefix", &PathWitness::prefix)
      .def("length", &PathWitness::length)
      .def(py::self == py::self);

  py::class_<SetDistance>(m, "SetDistance")
      .def_readonly("dist_to_set", &SetDistance::dist_to_set)
      .def_readonly("nearest", &SetDistance::nearest);

  m.def("sssp", &sssp, py::arg("g"), py::arg("source"));
  m.def("unique_shortest_path", &unique_shortest_path, py::arg("g"),
        py::arg("u"), py::arg("v"),
        "The unique shortest u-v path, or None when several are tied.");
  m.def("distances_from_set", &distances_from_set, py::arg("g"),
        py::arg("anchors"));

  py::class_<Partition>(m, "Partition")
      .def_readonly("path", &Partition::path)
      .def_readonly("block_of", &Partition::block_of)
      .def_readonly("blocks", &Partition::blocks)
      .def_readonly("anchor_dist", &Partition::anchor_dist);

  py::class_<TieWitness>(m, "TieWitness")
      .def_readonly("vertex", &TieWitness::vertex)
      .def_readonly("tied_anchors", &TieWitness::tied_anchors)
      .def_readonly("distance", &TieWitness::distance);

  py::enum_<Cond3Clause>(m, "Cond3Clause")
      .value("WEIGHT_CLAUSE", Cond3Clause::kWeightClause)
      .value("BALANCE_CLAUSE", Cond3Clause::kBalanceClause);

  py::class_<CrossEdgeWitness>(m, "CrossEdgeWitness")
      .def_readonly("edge", &CrossEdgeWitness::edge)
      .def_readonly("block_a", &CrossEdgeWitness::block_a)
      .def_readonly("block_b", &CrossEdgeWitness::block_b)
      .def_readonly("anchor_separation", &CrossEdgeWitness::anchor_separation)
      .def_readonly("anchor_dist_a", &CrossEdgeWitness::anchor_dist_a)
      .def_readonly("anchor_dist_b", &CrossEdgeWitness::anchor_dist_b)
      .def_readonly("clause", &CrossEdgeWitness::clause);

  py::enum_<Verdict>(m, "Verdict")
      .value("PASS", Verdict::kPass)
      .value("FAIL", Verdict::kFail)
      .value("NOT_EVALUATED", Verdict::kNotEvaluated);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("cond1", &ConditionReport::cond1)
      .def_readonly("cond2", &ConditionReport::cond2)
      .def_readonly("cond3", &ConditionReport::cond3)
      .def_readonly("path", &ConditionReport::path)
      .def_readonly("partition", &ConditionReport::partition)
      .def_readonly("tie", &ConditionReport::tie)
      .def_readonly("cross_edge", &ConditionReport::cross_edge)
      .def("overall", &ConditionReport::overall);

  py::class_<SpanningTree>(m, "SpanningTree")
      .def_readonly("n", &SpanningTree::n)
      .def_readonly("edges", &SpanningTree::edges)
      .def(py::self == py::self)
      .def("__repr__", [](const SpanningTree& t) {
        std::ostringstream os;
        os << "SpanningTree(n=" << t.n << ")";
        return os.str();
      });

  py::class_<ConstructResult>(m, "ConstructResult")
      .def_readonly("tree", &ConstructResult::tree)
      .def_readonly("report", &ConstructResult::report);

  py::class_<VerifyFailure>(m, "VerifyFailure")
      .def_readonly("vertex", &VerifyFailure::vertex)
      .def_readonly("tree_dist", &VerifyFailure::tree_dist)
      .def_readonly("graph_dist", &VerifyFailure::graph_dist);

  m.def("check_conditions", &check_conditions, py::arg("g"), py::arg("u"),
        py::arg("v"),
        "Decide whether one spanning tree preserves all distances from "
        "both u and v; reports which condition breaks and why.");
  m.def("build_partition",
        [](const WeightedGraph& g, const PathWitness& p) -> py::object {
          auto res = build_partition(g, p);
          if (std::holds_alternative<Partition>(res))
            return py::cast(std::get<Partition>(res));
          return py::cast(std::get<TieWitness>(res));
        },
        py::arg("g"), py::arg("path"),
        "Partition vertices by nearest path vertex; returns a TieWitness "
        "when some vertex is equidistant from two path vertices.");
  m.def("construct_common_dp_tree", &construct_common_dp_tree, py::arg("g"),
        py::arg("u"), py::arg("v"));
  m.def("verify_dp_tree", &verify_dp_tree, py::arg("g"), py::arg("tree"),
        py::arg("root"),
        "None when the tree preserves all distances from root, else the "
        "smallest failing vertex.");
  m.def("tree_distances", &tree_distances, py::arg("tree"), py::arg("root"));
  m.def("potential", &potential, py::arg("partition"), py::arg("x"));
  m.def("parse_tree",
        [](const std::string& text, const WeightedGraph& g) {
          return parse_tree(text, g);
        },
        py::arg("text"), py::arg("g"));
  m.def("serialize_tree", &serialize_tree, py::arg("tree"));

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("tree", &BruteForceResult::tree)
      .def_readonly("count", &BruteForceResult::count)
      .def_readonly("trees_searched", &BruteForceResult::trees_searched)
      .def("found", &BruteForceResult::found);

  m.def("enumerate_spanning_trees",
        [](const WeightedGraph& g, std::uint64_t cap) {
          return enumerate_spanning_trees(g, cap);
        },
        py::arg("g"), py::arg("cap") = kDefaultTreeCap);
  m.def("brute_force_common_dp_tree", &brute_force_common_dp_tree,
        py::arg("g"), py::arg("u"), py::arg("v"),
        py::arg("cap") = kDefaultTreeCap,
        "Try every spanning tree; counts the ones preserving distances "
        "from both u and v.");
  m.def("random_connected_graph",
        [](int n, int m, std::int64_t max_weight, std::uint64_t seed) {
          GenSpec spec;
          spec.n = n;
          spec.m = m;
          spec.max_weight = max_weight;
          spec.seed = seed;
          return random_connected_graph(spec);
        },
        py::arg("n"), py::arg("m"), py::arg("max_weight") = 10,
        py::arg("seed") = 0);
}
