#include "expdom/tree_enumeration.hpp"

#include <algorithm>
#include <set>

#include "expdom/error.hpp"

namespace expdom {

namespace {

std::string encode_rooted(const Graph& g, Vertex v, Vertex parent, bool has_parent) {
  std::vector<std::string> parts;
  for (Vertex w : g.neighbors(v)) {
    if (has_parent && w == parent) continue;
    parts.push_back(encode_rooted(g, w, v, true));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<Vertex> tree_centers(const Graph& g) {
  const auto n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  // peel leaves layer by layer
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : g.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_tree_code(const Graph& tree) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "canonical code requires a tree");
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    auto code = encode_rooted(tree, c, c, false);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Graph tree_from_code(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char c : code) {
    if (c == '(') {
      const Vertex v = next++;
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.empty()) throw Error(ErrorKind::InvalidArgument, "unbalanced tree code");
      stack.pop_back();
    } else {
      throw Error(ErrorKind::InvalidArgument, "invalid character in tree code");
    }
  }
  if (!stack.empty()) throw Error(ErrorKind::InvalidArgument, "unbalanced tree code");
  return Graph(next, edges);
}

std::vector<Graph> enumerate_subcubic_trees(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::Guard, "tree enumeration supports 1 <= n <= " +
                                      std::to_string(kMaxEnumerationOrder));
  }
  std::set<std::string> level{canonical_tree_code(Graph(1))};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::string> grown;
    for (const auto& code : level) {
      const Graph t = tree_from_code(code);
      auto edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        if (t.degree(v) >= 3) continue;
        edges.emplace_back(v, static_cast<Vertex>(k));
        grown.insert(canonical_tree_code(Graph(k + 1, edges)));
        edges.pop_back();
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(tree_from_code(code));
  return out;
}

void for_each_subcubic_tree(std::size_t n, const std::function<bool(const Graph&)>& visit) {
  for (const auto& t : enumerate_subcubic_trees(n)) {
    if (!visit(t)) return;
  }
}

}  // namespace expdom
