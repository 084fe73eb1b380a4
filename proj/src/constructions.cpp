#include "expdom/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "expdom/error.hpp"
#include "expdom/tree_enumeration.hpp"

namespace expdom {

RootedTree build_t_tree(const std::vector<std::size_t>& degrees, bool force) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (auto d : degrees) {
    if (d != 0 && level > kConstructionGuard / d) {
      level = kConstructionGuard + 1;
    } else {
      level *= d;
    }
    total = std::min(total + level, kConstructionGuard + 1);
  }
  if (total > kConstructionGuard && !force) {
    throw Error(ErrorKind::Guard, "T-tree would exceed " + std::to_string(kConstructionGuard) +
                                      " vertices (use force to override)");
  }
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (auto d : degrees) {
    std::vector<Vertex> children;
    for (Vertex parent : frontier) {
      for (std::size_t i = 0; i < d; ++i) {
        edges.emplace_back(parent, next);
        children.push_back(next++);
      }
    }
    frontier = std::move(children);
  }
  return RootedTree(Graph(next, edges), 0);
}

Graph build_figure2(std::size_t k) {
  const std::size_t spine = 4 * k + 5;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  Vertex next = static_cast<Vertex>(spine);
  auto pendant = [&](Vertex at) { edges.emplace_back(at, next++); };
  pendant(0);
  pendant(0);
  for (std::size_t j = 1; j <= k; ++j) pendant(static_cast<Vertex>(4 * j));
  pendant(static_cast<Vertex>(spine - 1));
  pendant(static_cast<Vertex>(spine - 1));
  return Graph(next, edges);
}

std::size_t degree5_depth(std::size_t h) {
  if (h < 1) throw Error(ErrorKind::InvalidArgument, "degree-5 instance needs h >= 1");
  if (h > 20) throw Error(ErrorKind::Guard, "degree-5 depth formula limited to h <= 20");
  // d >= (4 * 2^(2h-1) + 3(h-1)) / 3, rounded up in integers.
  const std::size_t numerator = (std::size_t{4} << (2 * h - 1)) + 3 * (h - 1);
  return (numerator + 2) / 3;
}

Degree5Instance build_degree5_instance(std::size_t h, bool force) {
  const std::size_t d = degree5_depth(h);
  std::vector<std::size_t> degrees(d, 4);
  degrees[0] = 5;
  Degree5Instance out{build_t_tree(degrees, force), {}, d, h};
  const auto& t = out.tree;
  std::vector<Vertex> chosen;
  for (Vertex v : t.bfs_order()) {
    if (t.depth(v) != d - h) continue;
    Vertex leaf = v;
    while (!t.is_leaf(leaf)) leaf = t.children(leaf).front();
    chosen.push_back(leaf);
  }
  out.set = make_vertex_set(chosen);
  return out;
}

std::vector<Graph> extremal_successors(const Graph& t) {
  std::vector<Graph> out;
  const auto n = static_cast<Vertex>(t.order());
  const auto base = t.edges();
  auto grow = [&](std::initializer_list<Edge> added) {
    auto edges = base;
    edges.insert(edges.end(), added.begin(), added.end());
    out.emplace_back(n + 3, edges);
  };
  for (Vertex u = 0; u < n; ++u) {
    const auto deg = t.degree(u);
    // Op 1: two new neighbours of u, one of them with a further leaf.
    if (deg <= 1) grow({{u, n}, {u, n + 1}, {n + 1, n + 2}});
    if (deg != 2) continue;
    // Op 2: u's leaf neighbour v gets a child; u gets a new child carrying a leaf.
    for (Vertex v : t.neighbors(u)) {
      if (t.degree(v) == 1) grow({{v, n}, {u, n + 1}, {n + 1, n + 2}});
    }
    // Op 3: pendant path of three vertices.
    grow({{u, n}, {n, n + 1}, {n + 1, n + 2}});
  }
  return out;
}

std::vector<Graph> generate_extremal_candidates(std::size_t n_max) {
  if (n_max > kExtremalGuard) {
    throw Error(ErrorKind::Guard, "extremal generation supports n_max <= " +
                                      std::to_string(kExtremalGuard));
  }
  std::vector<Graph> out;
  if (n_max < 1) return out;
  std::set<std::string> layer{canonical_tree_code(Graph(1))};
  for (std::size_t n = 1; n <= n_max; n += 3) {
    std::set<std::string> next;
    for (const auto& code : layer) {
      const Graph t = tree_from_code(code);
      out.push_back(t);
      if (n + 3 > n_max) continue;
      for (const auto& grown : extremal_successors(t)) next.insert(canonical_tree_code(grown));
    }
    layer = std::move(next);
  }
  return out;
}

Graph cubic_caterpillar(std::size_t leaves) {
  if (leaves < 3) throw Error(ErrorKind::InvalidArgument, "caterpillar needs at least 3 leaves");
  const std::size_t spine = leaves - 2;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  Vertex next = static_cast<Vertex>(spine);
  for (Vertex i = 0; i < spine; ++i) {
    std::size_t deg = (i > 0 ? 1 : 0) + (i + 1 < spine ? 1 : 0);
    for (; deg < 3; ++deg) edges.emplace_back(i, next++);
  }
  return Graph(next, edges);
}

Theorem7Instance build_theorem7_extremal(const Graph& t0) {
  if (!is_tree(t0)) throw Error(ErrorKind::NotATree, "gluing needs a tree");
  std::vector<Vertex> leaves;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t0.order(); ++v) {
    if (t0.degree(v) == 1) {
      leaves.push_back(v);
    } else if (t0.degree(v) == 3) {
      inner.push_back(v);
    } else {
      throw Error(ErrorKind::Precondition, "every non-leaf vertex must have degree 3");
    }
  }
  if (leaves.size() < 3) throw Error(ErrorKind::Precondition, "gluing needs at least 3 leaves");

  const auto l = leaves.size();
  std::vector<Edge> edges;
  for (std::size_t copy = 0; copy < 3; ++copy) {
    std::vector<Vertex> id(t0.order());
    for (std::size_t i = 0; i < l; ++i) id[leaves[i]] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      id[inner[i]] = static_cast<Vertex>(l + copy * inner.size() + i);
    }
    for (const auto& [a, b] : t0.edges()) edges.emplace_back(id[a], id[b]);
  }
  Theorem7Instance out;
  out.graph = Graph(l + 3 * inner.size(), edges);
  for (Vertex i = 0; i < l; ++i) out.triple_set.push_back(i);
  out.leaves = l;
  return out;
}

}  // namespace expdom
