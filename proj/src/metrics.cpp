#include "expdom/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace expdom {

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push(y);
      }
    }
  }
  return dist;
}

namespace {

// Shortest cycle through `root`'s BFS tree: any non-tree edge (x, y) closes a
// closed walk of length d(x) + d(y) + 1; the minimum over all roots is the girth.
std::size_t shortest_cycle_from(const Graph& g, Vertex root) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kNone);
  std::vector<Vertex> parent(g.order(), root);
  std::queue<Vertex> queue;
  dist[root] = 0;
  queue.push(root);
  std::size_t best = kNone;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (2 * dist[x] + 1 >= best) break;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kNone) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push(y);
      } else if (parent[x] != y) {
        best = std::min(best, dist[x] + dist[y] + 1);
      }
    }
  }
  return best;
}

}  // namespace

GraphMetrics graph_metrics(const Graph& g) {
  GraphMetrics m;
  const auto n = g.order();
  m.max_degree = g.max_degree();
  m.degree_histogram.assign(n == 0 ? 1 : m.max_degree + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++m.degree_histogram[g.degree(v)];

  m.connected = is_connected(g);
  m.eccentricities.resize(n);
  std::size_t diameter = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    std::size_t ecc = 0;
    bool finite = true;
    for (const auto& d : dist) {
      if (!d) {
        finite = false;
        break;
      }
      ecc = std::max(ecc, *d);
    }
    if (finite) {
      m.eccentricities[v] = ecc;
      diameter = std::max(diameter, ecc);
    }
  }
  if (m.connected) m.diameter = diameter;

  std::size_t girth = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n; ++v) girth = std::min(girth, shortest_cycle_from(g, v));
  if (girth != std::numeric_limits<std::size_t>::max()) m.girth = girth;
  return m;
}

}  // namespace expdom
