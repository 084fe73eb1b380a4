#include <doctest.h>

#include <random>

#include "expdom/error.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/tree_enumeration.hpp"
#include "expdom/tree_solver.hpp"
#include "expdom/weights.hpp"
#include "oracles.hpp"

using namespace expdom;

namespace {

// Deficiency straight from the definition: induced subtree, fresh blocked weights.
Dyadic naive_deficiency(const RootedTree& t, const VertexSet& set, Vertex u) {
  const auto sub = make_vertex_set(t.subtree(u));
  const Graph g = t.graph().induced(sub);
  VertexSet local;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (contains(set, sub[i])) local.push_back(static_cast<Vertex>(i));
  }
  const auto w = oracle::naive_weights(g, local);
  std::optional<Dyadic> best;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto d = static_cast<std::int64_t>(t.depth(sub[i]) - t.depth(u));
    const Dyadic value = (Dyadic(1) - w[i]).scaled(d);
    if (!best || value > *best) best = value;
  }
  return *best;
}

}  // namespace

TEST_CASE("decomposition") {
  const auto parts = decompose_by_S(path_graph(5), {2});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == VertexSet{0, 1, 2});
  CHECK(parts[0].boundary == VertexSet{2});
  CHECK(parts[1].vertices == VertexSet{2, 3, 4});
  CHECK(parts[1].boundary == VertexSet{2});

  const auto whole = decompose_by_S(path_graph(5), {});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].vertices.size() == 5);
  CHECK(whole[0].boundary.empty());
  CHECK_THROWS_AS(decompose_by_S(cycle_graph(4), {}), Error);
}

TEST_CASE("parts preserve weights") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 13;
    const Graph t = oracle::random_subcubic_tree(n, rng);
    const auto s = oracle::random_subset(n, 0.3, rng);
    const auto whole = weight_profile(t, s, WeightMode::Blocked).weights;
    std::vector<int> owner(n, 0);
    for (const auto& part : decompose_by_S(t, s)) {
      const Graph sub = t.induced(part.vertices);
      VertexSet local;
      for (std::size_t j = 0; j < part.vertices.size(); ++j) {
        const Vertex v = part.vertices[j];
        if (contains(part.boundary, v)) {
          local.push_back(static_cast<Vertex>(j));
          CHECK(sub.degree(static_cast<Vertex>(j)) == 1);
        } else {
          ++owner[v];
        }
      }
      const auto w = weight_profile(sub, local, WeightMode::Blocked).weights;
      for (std::size_t j = 0; j < part.vertices.size(); ++j) {
        if (!contains(part.boundary, part.vertices[j])) CHECK(w[j] == whole[part.vertices[j]]);
      }
    }
    for (Vertex v = 0; v < n; ++v) CHECK(owner[v] == (contains(s, v) ? 0 : 1));
  }
}

TEST_CASE("partial deficiency examples") {
  const RootedTree p4(path_graph(4), 0);
  CHECK(partial_deficiency(p4, {3}, 2) == Dyadic(0));
  CHECK(partial_deficiency(p4, {}, 3) == Dyadic(1));
  CHECK(partial_deficiency(p4, {}, 2) >= Dyadic(2));
  const auto table = deficiency_table(p4, {3});
  CHECK(table[3] == Dyadic(-1));
}

TEST_CASE("deficiency matches the definition") {
  std::mt19937_64 rng(32);
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& t : enumerate_subcubic_trees(n)) {
      for (Vertex r = 0; r < n; ++r) {
        const RootedTree rooted(t, r);
        // S drawn among the non-root endvertices
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
          if (v != r && t.degree(v) <= 1 && rng() % 2) s.push_back(v);
        }
        const auto table = deficiency_table(rooted, s);
        for (Vertex u = 0; u < n; ++u) {
          CHECK(table[u] == naive_deficiency(rooted, s, u));
        }
      }
    }
  }
}

TEST_CASE("selection examples") {
  CHECK(select_extension(RootedTree(path_graph(2), 0), {}) == 0);
  CHECK(select_extension(RootedTree(path_graph(5), 0), {}) == 3);
  CHECK(select_extension(RootedTree(star_graph(3), 1), {}) == 0);
  CHECK_THROWS_AS(select_extension(RootedTree(star_graph(3), 1), {0}), Error);
  CHECK_THROWS_AS(select_extension(RootedTree(path_graph(3), 0), {0}), Error);
}

TEST_CASE("solver examples") {
  CHECK(gamma_e_tree(star_graph(3)).result.value == 1);
  const auto p10 = gamma_e_tree(path_graph(10));
  CHECK(p10.result.value == 3);
  CHECK(is_exponential_dominating(path_graph(10), p10.result.witness).ok);
  CHECK(gamma_e_tree(Graph(1)).result.value == 1);
  CHECK_THROWS_AS(gamma_e_tree(cycle_graph(5)), Error);
  CHECK_THROWS_AS(gamma_e_tree(star_graph(4)), Error);
}

TEST_CASE("tree solver matches brute force") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& t : enumerate_subcubic_trees(n)) {
      const auto r = gamma_e_tree(t);
      CHECK(r.result.value == oracle::brute_gamma(t));
      CHECK(oracle::naive_dominates(t, r.result.witness));
    }
  }
}

TEST_CASE("trace and termination measure") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const Graph t = oracle::random_subcubic_tree(2 + i % 25, rng);
    const auto r = gamma_e_tree(t, true);
    REQUIRE(r.trace.size() == r.result.value);
    for (const auto& step : r.trace) {
      CHECK(contains(r.result.witness, step.chosen));
      CHECK((step.deficient_after < step.deficient_before || step.shortfall_after < step.shortfall_before));
      CHECK_FALSE(step.deficiency.empty());
    }
    CHECK(r.trace.back().deficient_after == 0);
  }
}
