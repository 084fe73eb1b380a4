#pragma once

#include <optional>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

/// A tree together with a root; parent/children/depth are derived once at construction.
class RootedTree {
 public:
  /// Throws NotATree unless g is connected and acyclic; r must be < n.
  RootedTree(Graph g, Vertex root);

  const Graph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  std::size_t order() const noexcept { return graph_.order(); }

  std::optional<Vertex> parent(Vertex v) const {
    return v == root_ ? std::nullopt : std::optional<Vertex>(parent_[v]);
  }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  std::size_t depth(Vertex v) const { return depth_[v]; }
  bool is_leaf(Vertex v) const { return children_[v].empty(); }

  /// Vertices in BFS order from the root (parents before children).
  const std::vector<Vertex>& bfs_order() const noexcept { return order_; }

  /// V(T_u) in preorder, u first.
  std::vector<Vertex> subtree(Vertex u) const;
  /// Height of T_u (0 for a leaf).
  std::size_t subtree_depth(Vertex u) const;

 private:
  Graph graph_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> order_;
};

RootedTree root_tree(const Graph& g, Vertex root);

}  // namespace expdom
