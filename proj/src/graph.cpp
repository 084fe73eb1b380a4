#include "expdom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "expdom/error.hpp"

namespace expdom {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

std::vector<char> membership(const VertexSet& set, std::size_t n) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) {
    if (v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
    }
    mask[v] = 1;
  }
  return mask;
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) +
                      " out of range for order " + std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      const auto dup = *std::adjacent_find(list.begin(), list.end());
      throw Error(ErrorKind::DuplicateEdge,
                  "duplicate edge " + std::to_string(std::min<std::size_t>(v, dup)) + " " +
                      std::to_string(std::max<std::size_t>(v, dup)));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::is_cubic() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& list) { return list.size() == 3; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != order()) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match graph order");
  }
  labels_ = std::move(labels);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::int64_t> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= order()) {
      throw Error(ErrorKind::VertexOutOfRange, "induced: vertex out of range");
    }
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      kept.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  Graph out(keep.size(), kept);
  if (labels_) {
    std::vector<std::string> labels;
    for (Vertex v : keep) labels.push_back((*labels_)[v]);
    out.labels_ = std::move(labels);
  }
  return out;
}

Graph Graph::without(const VertexSet& drop) const {
  const auto removed = membership(drop, order());
  VertexSet keep;
  for (Vertex v = 0; v < order(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced(keep);
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  if (perm.size() != order()) {
    throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> mapped;
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(order(), mapped);
}

bool is_connected(const Graph& g) {
  const auto n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push(y);
      }
    }
  }
  return reached == n;
}

bool is_forest(const Graph& g) {
  // union-find cycle check
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, v] : g.edges()) {
    const auto a = find(u);
    const auto b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, edges);
}

}  // namespace expdom
