#include "expdom/rooted_tree.hpp"

#include <algorithm>
#include <queue>

#include "expdom/error.hpp"

namespace expdom {

RootedTree::RootedTree(Graph g, Vertex root) : graph_(std::move(g)), root_(root) {
  const auto n = graph_.order();
  if (root_ >= n) {
    throw Error(ErrorKind::VertexOutOfRange, "root out of range");
  }
  if (!is_tree(graph_)) {
    throw Error(ErrorKind::NotATree, "graph is not a tree");
  }
  parent_.assign(n, root_);
  children_.assign(n, {});
  depth_.assign(n, 0);
  order_.reserve(n);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(root_);
  seen[root_] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    order_.push_back(x);
    for (Vertex y : graph_.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      depth_[y] = depth_[x] + 1;
      children_[x].push_back(y);
      queue.push(y);
    }
  }
}

std::vector<Vertex> RootedTree::subtree(Vertex u) const {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{u};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const auto& kids = children_[x];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::size_t RootedTree::subtree_depth(Vertex u) const {
  std::size_t best = 0;
  for (Vertex v : subtree(u)) best = std::max(best, depth_[v] - depth_[u]);
  return best;
}

RootedTree root_tree(const Graph& g, Vertex root) { return RootedTree(g, root); }

}  // namespace expdom
