#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace expdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

bool contains(const VertexSet& set, Vertex v);

/// Membership mask of length n. Throws if any id is >= n.
std::vector<char> membership(const VertexSet& set, std::size_t n);

/**
 * Undirected simple graph with sorted adjacency lists.
 *
 * Construction validates simplicity (no loops, no parallel edges) and ids.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t max_degree() const;
  bool is_subcubic() const { return max_degree() <= 3; }
  bool is_cubic() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Graph induced by `keep`, renumbered in increasing id order.
  Graph induced(const VertexSet& keep) const;
  /// Graph with `drop` deleted, remaining vertices renumbered in increasing id order.
  Graph without(const VertexSet& drop) const;
  /// Relabels: vertex v becomes perm[v].
  Graph permuted(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Path P_n on vertices 0..n-1.
Graph path_graph(std::size_t n);
/// Cycle C_n, n >= 3.
Graph cycle_graph(std::size_t n);
/// Star K_{1,k} with center 0.
Graph star_graph(std::size_t leaves);

}  // namespace expdom
