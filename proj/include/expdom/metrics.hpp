#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

/// Infinite girth/diameter/eccentricity is represented as std::nullopt.
struct GraphMetrics {
  std::vector<std::size_t> degree_histogram;  // index = degree
  std::size_t max_degree = 0;
  bool connected = true;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> diameter;
  std::vector<std::optional<std::size_t>> eccentricities;
};

GraphMetrics graph_metrics(const Graph& g);

/// BFS distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

}  // namespace expdom
