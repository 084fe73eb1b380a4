#pragma once

#include <cstddef>
#include <vector>

#include "expdom/graph.hpp"
#include "expdom/rooted_tree.hpp"

namespace expdom {

inline constexpr std::size_t kConstructionGuard = 10'000'000;
inline constexpr std::size_t kExtremalGuard = 16;

/**
 * Rooted tree in which every depth-i vertex has degrees[i] children. Vertices
 * are numbered in BFS order with children left to right; root is 0.
 */
RootedTree build_t_tree(const std::vector<std::size_t>& degrees, bool force = false);

/**
 * Spine s_1..s_{4k+5} (ids 0..4k+4), two extra leaves on each spine end and one
 * pendant leaf on s_{4j+1} for j = 1..k. Order 5k + 9.
 */
Graph build_figure2(std::size_t k);

struct Degree5Instance {
  RootedTree tree;
  VertexSet set;
  std::size_t depth = 0;
  std::size_t h = 0;
};

/// Smallest d with d >= 4/3 * 2^(2h-1) + h - 1.
std::size_t degree5_depth(std::size_t h);

/**
 * T(5,4,...,4) of depth degree5_depth(h) with S the leftmost leaf below every
 * vertex at depth d - h. Throws InvalidArgument for h < 1 and Guard past 10^7
 * vertices unless forced.
 */
Degree5Instance build_degree5_instance(std::size_t h, bool force = false);

/**
 * Closure of K_1 under the three growth operations, one representative per
 * isomorphism class, ordered by (order, canonical code). Guarded to n_max <= 16.
 */
std::vector<Graph> generate_extremal_candidates(std::size_t n_max);

/// The three growth operations applied once at every eligible vertex of t.
std::vector<Graph> extremal_successors(const Graph& t);

struct Theorem7Instance {
  Graph graph;
  /// The glued leaves; every other vertex sees blocked weight >= 3.
  VertexSet triple_set;
  std::size_t leaves = 0;
};

/**
 * Glues three copies of t0 along their leaves (leaf i of every copy becomes
 * vertex i, leaves taken in increasing id order). t0 needs >= 3 leaves and
 * every other vertex of degree 3. Order 4l - 6.
 */
Theorem7Instance build_theorem7_extremal(const Graph& t0);

/// Caterpillar with l >= 3 leaves whose spine vertices all have degree 3.
Graph cubic_caterpillar(std::size_t leaves);

}  // namespace expdom
