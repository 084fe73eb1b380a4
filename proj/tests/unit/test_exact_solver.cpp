#include <doctest.h>

#include <numeric>
#include <random>

#include "expdom/constructions.hpp"
#include "expdom/error.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/named_graphs.hpp"
#include "expdom/tree_enumeration.hpp"
#include "expdom/tree_solver.hpp"
#include "oracles.hpp"

using namespace expdom;

TEST_CASE("small values") {
  CHECK(gamma_e_exact(star_graph(3)).value == 1);
  const auto p6 = gamma_e_exact(path_graph(6));
  CHECK(p6.value == 2);
  CHECK(p6.proven_minimum);
  CHECK(is_exponential_dominating(path_graph(6), p6.witness).ok);
  CHECK(gamma_e_exact(Graph(0)).value == 0);
  CHECK(gamma_e_exact(Graph(1)).value == 1);
  CHECK(gamma_e_exact(build_figure2(3)).value == 5);
}

TEST_CASE("first hit in colex order") {
  // P_3: {1} is the first singleton that works; {0} is tried first and fails.
  const auto r = gamma_e_exact(path_graph(3));
  CHECK(r.witness == VertexSet{1});
  CHECK(r.explored >= 2);
}

TEST_CASE("agrees with an independent brute force on random graphs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 250; ++i) {
    const std::size_t n = 1 + i % 11;
    const Graph g = i % 2 ? oracle::random_subcubic_graph(n, 0.6, rng) : oracle::random_subcubic_tree(n, rng);
    const auto r = gamma_e_exact(g);
    CHECK(r.value == oracle::brute_gamma(g));
    CHECK(oracle::naive_dominates(g, r.witness));
  }
}

TEST_CASE("non-subcubic graphs use the unpruned search") {
  // K_{1,5} plus pendant paths has degree 5; the answer must still match brute force.
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 4 + i % 8;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    }
    const Graph g(n, edges);
    CHECK(gamma_e_exact(g).value == oracle::brute_gamma(g));
  }
}

TEST_CASE("porous mode") {
  // Porous weights only grow, so porous gamma never exceeds blocked gamma.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_connected_subcubic(3 + i % 10, i % 4, rng);
    const auto p = gamma_e_exact(g, {WeightMode::Porous, std::nullopt, false});
    CHECK(p.mode == WeightMode::Porous);
    CHECK(p.value <= gamma_e_exact(g).value);
    CHECK(is_exponential_dominating(g, p.witness, WeightMode::Porous).ok);
  }
  // P_3 with porous weights: {0,2} is not needed, one centre vertex suffices either way.
  CHECK(gamma_e_exact(path_graph(3), {WeightMode::Porous, std::nullopt, false}).value == 1);
}

TEST_CASE("budget and guard") {
  try {
    gamma_e_exact(path_graph(10), {WeightMode::Blocked, 2, false});
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.lower_bound() == 3);
    CHECK(e.explored() > 0);
  }
  CHECK_THROWS_AS(gamma_e_exact(path_graph(33)), Error);
  std::mt19937_64 rng(26);
  const Graph big = oracle::random_subcubic_tree(33, rng);
  CHECK(gamma_e_exact(big, {WeightMode::Blocked, std::nullopt, true}).value ==
        gamma_e_tree(big).result.value);
}

TEST_CASE("relabelling does not change the value") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 80; ++i) {
    const Graph g = oracle::random_subcubic_graph(2 + i % 12, 0.5, rng);
    std::vector<Vertex> rev(g.order());
    std::iota(rev.rbegin(), rev.rend(), 0);
    CHECK(gamma_e_exact(g).value == gamma_e_exact(g.permuted(rev)).value);
  }
}

TEST_CASE("subcubic trees sit between (n+2)/6 and (n+2)/3") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& t : enumerate_subcubic_trees(n)) {
      const auto v = gamma_e_exact(t).value;
      CHECK(6 * v >= n + 2);
      CHECK(3 * v <= n + 2);
    }
  }
}

TEST_CASE("paths") {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto v = gamma_e_exact(path_graph(n)).value;
    CHECK(4 * v >= n + 1);
    if (n == 6 || n == 10) CHECK(4 * v == n + 2);
  }
}

TEST_CASE("minimum triple-weight sets") {
  const auto k33 = min_triple_weight_set(named_graph("k33"));
  CHECK(k33.value == 3);
  CHECK(min_triple_weight_set(named_graph("k4")).value == 3);
  CHECK(min_triple_weight_set(named_graph("prism")).value >= 3);
  // Degree <= 2 vertices are forced.
  const auto p4 = min_triple_weight_set(path_graph(4));
  CHECK(p4.witness == VertexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(min_triple_weight_set(path_graph(2)), Error);
  CHECK_THROWS_AS(min_triple_weight_set(star_graph(4)), Error);
  CHECK_THROWS_AS(min_triple_weight_set(path_graph(25)), Error);

  std::mt19937_64 rng(25);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3 + i % 8;
    const Graph g = oracle::random_connected_subcubic(n, 1 + i % 5, rng);
    const auto r = min_triple_weight_set(g);
    const auto w = oracle::naive_weights(g, r.witness);
    for (Vertex v = 0; v < n; ++v) {
      if (!contains(r.witness, v)) CHECK(w[v] >= Dyadic(3));
    }
    CHECK(4 * r.value >= n + 6);
  }
}
