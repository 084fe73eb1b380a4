#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "expdom/error.hpp"
#include "expdom/graph_io.hpp"
#include "expdom/metrics.hpp"
#include "expdom/named_graphs.hpp"
#include "expdom/rooted_tree.hpp"
#include "expdom/tree_enumeration.hpp"
#include "oracles.hpp"

using namespace expdom;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an expdom::Error");
  return ErrorKind::Integrity;
}

}  // namespace

TEST_CASE("parse and emit EDGE") {
  const Graph p3 = parse_graph("3 2\n0 1\n1 2", GraphFormat::Edge);
  CHECK(p3 == path_graph(3));
  CHECK(emit_graph(p3, GraphFormat::Edge) == "3 2\n0 1\n1 2");
  CHECK(emit_graph(Graph(0), GraphFormat::Edge) == "0 0");
  CHECK(parse_graph("# comment\n\n3 1\n# mid\n2 0\n", GraphFormat::Edge).has_edge(0, 2));
}

TEST_CASE("parse errors are distinct") {
  CHECK(kind_of([] { parse_graph("2 1\n0 0", GraphFormat::Edge); }) == ErrorKind::Loop);
  CHECK(kind_of([] { parse_graph("3 2\n0 1\n1 0", GraphFormat::Edge); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { parse_graph("3 1\n0 3", GraphFormat::Edge); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { parse_graph("three 1\n0 1", GraphFormat::Edge); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_graph("", GraphFormat::Edge); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_graph("3 2\n0 1", GraphFormat::Edge); }) == ErrorKind::MalformedEdge);
  CHECK(kind_of([] { parse_graph("3 1\n0 x", GraphFormat::Edge); }) == ErrorKind::MalformedEdge);
  CHECK(kind_of([] { parse_graph("D~", GraphFormat::Graph6); }) == ErrorKind::MalformedGraph6);
  CHECK(kind_of([] { read_graph_file("/nonexistent/file.edge"); }) == ErrorKind::Io);
}

TEST_CASE("graph6 known encodings and roundtrip") {
  CHECK(emit_graph(named_graph("k4"), GraphFormat::Graph6) == "C~");
  CHECK(emit_graph(named_graph("petersen"), GraphFormat::Graph6).size() == 1 + 8);
  CHECK(parse_graph(">>graph6<<C~", GraphFormat::Graph6) == named_graph("k4"));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_subcubic_graph(1 + i % 40, 0.5, rng);
    for (auto fmt : {GraphFormat::Edge, GraphFormat::Graph6}) {
      const auto text = emit_graph(g, fmt);
      const Graph back = parse_graph(text, fmt);
      CHECK(back == g);
      CHECK(emit_graph(back, fmt) == text);
    }
  }
}

TEST_CASE("vertex set literals") {
  CHECK(parse_vertex_set("7,0,3", 8) == VertexSet{0, 3, 7});
  CHECK(parse_vertex_set("", 3).empty());
  CHECK(format_vertex_set({0, 3, 7}) == "0,3,7");
  CHECK(kind_of([] { parse_vertex_set("0,9", 5); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { parse_vertex_set("0,,1", 5); }) == ErrorKind::MalformedSet);
}

TEST_CASE("graph operations") {
  const Graph g = cycle_graph(5);
  CHECK(g.is_subcubic());
  CHECK_FALSE(g.is_cubic());
  CHECK(named_graph("petersen").is_cubic());
  const Graph h = g.without({0});
  CHECK(h == path_graph(4));
  CHECK(g.induced({1, 2, 3}) == path_graph(3));
  CHECK(is_tree(star_graph(3)));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(kind_of([] { Graph(2, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
}

TEST_CASE("metrics") {
  const auto p6 = graph_metrics(path_graph(6));
  CHECK(p6.diameter == 5u);
  CHECK_FALSE(p6.girth.has_value());
  const auto k4 = graph_metrics(named_graph("k4"));
  CHECK(k4.max_degree == 3);
  CHECK(k4.girth == 3u);
  const auto pet = graph_metrics(named_graph("petersen"));
  CHECK(pet.girth == oracle::naive_girth(named_graph("petersen")));
  CHECK(pet.girth == 5u);
  CHECK(pet.diameter == 2u);
  CHECK_FALSE(graph_metrics(Graph(3, {{0, 1}})).diameter.has_value());
}

TEST_CASE("metrics agree with all-pairs recomputation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 30;
    const Graph g = i % 2 ? oracle::random_connected_subcubic(n, i % 7, rng)
                          : oracle::random_subcubic_graph(n, 0.3, rng);
    const auto m = graph_metrics(g);
    CHECK(m.girth == oracle::naive_girth(g));
    CHECK(m.diameter == oracle::naive_diameter(g));
    CHECK(m.connected == is_connected(g));
    if (m.girth) CHECK(*m.girth >= 3);
  }
}

TEST_CASE("root_tree") {
  const auto end = root_tree(path_graph(3), 0);
  CHECK(end.depth(0) == 0);
  CHECK(end.depth(1) == 1);
  CHECK(end.depth(2) == 2);
  const auto mid = root_tree(path_graph(3), 1);
  CHECK(mid.children(1).size() == 2);
  CHECK(mid.subtree(1).size() == 3);
  CHECK(mid.subtree_depth(1) == 1);
  CHECK(kind_of([] { root_tree(cycle_graph(3), 0); }) == ErrorKind::NotATree);
  CHECK(kind_of([] { root_tree(path_graph(3), 3); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("tree enumeration small cases") {
  CHECK(enumerate_subcubic_trees(1).size() == 1);
  const auto four = enumerate_subcubic_trees(4);
  REQUIRE(four.size() == 2);
  std::set<std::string> sigs;
  for (const auto& t : four) sigs.insert(oracle::tree_signature(t));
  CHECK(sigs == std::set<std::string>{oracle::tree_signature(path_graph(4)),
                                      oracle::tree_signature(star_graph(3))});
  CHECK(kind_of([] { enumerate_subcubic_trees(0); }) == ErrorKind::Guard);
  CHECK(kind_of([] { enumerate_subcubic_trees(17); }) == ErrorKind::Guard);
}

TEST_CASE("tree enumeration matches two independent generators") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto trees = enumerate_subcubic_trees(n);
    std::vector<std::string> sigs;
    for (const auto& t : trees) {
      CHECK(t.order() == n);
      CHECK(is_tree(t));
      CHECK(t.is_subcubic());
      sigs.push_back(oracle::tree_signature(t));
    }
    std::sort(sigs.begin(), sigs.end());
    CHECK(std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end());
    CHECK(sigs == oracle::trees_by_composition(n));
    CHECK(sigs == oracle::trees_by_reverse_growth(n));
  }
}

TEST_CASE("tree counts for larger orders follow the composition oracle") {
  for (std::size_t n = 13; n <= 16; ++n) {
    CHECK(enumerate_subcubic_trees(n).size() == oracle::trees_by_composition(n).size());
  }
}

TEST_CASE("canonical code is a complete invariant") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph t = oracle::random_subcubic_tree(2 + i % 15, rng);
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_tree_code(t) == canonical_tree_code(t.permuted(perm)));
    CHECK(canonical_tree_code(tree_from_code(canonical_tree_code(t))) == canonical_tree_code(t));
  }
  CHECK(canonical_tree_code(path_graph(4)) != canonical_tree_code(star_graph(3)));
}
