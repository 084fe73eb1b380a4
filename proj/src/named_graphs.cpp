#include "expdom/named_graphs.hpp"

#include <set>

#include "expdom/error.hpp"

namespace expdom {

Graph lcf_graph(const std::vector<int>& jumps, std::size_t repeats) {
  const auto n = static_cast<int>(jumps.size() * repeats);
  std::set<Edge> edges;
  auto add = [&](int a, int b) {
    const auto x = static_cast<Vertex>(((a % n) + n) % n);
    const auto y = static_cast<Vertex>(((b % n) + n) % n);
    edges.emplace(std::min(x, y), std::max(x, y));
  };
  for (int i = 0; i < n; ++i) {
    add(i, i + 1);
    add(i, i + jumps[static_cast<std::size_t>(i) % jumps.size()]);
  }
  return Graph(static_cast<std::size_t>(n), {edges.begin(), edges.end()});
}

std::vector<std::string> named_graph_names() {
  return {"k4", "k33", "petersen", "heawood", "mcgee", "tutte-coxeter", "prism"};
}

Graph named_graph(const std::string& name) {
  if (name == "k4") return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k33") {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 3; ++a) {
      for (Vertex b = 3; b < 6; ++b) edges.emplace_back(a, b);
    }
    return Graph(6, edges);
  }
  if (name == "prism") {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
  }
  if (name == "heawood") return lcf_graph({5, -5}, 7);
  if (name == "mcgee") return lcf_graph({12, 7, -7}, 8);
  if (name == "tutte-coxeter") return lcf_graph({-13, -9, 7, -7, 9, 13}, 5);
  throw Error(ErrorKind::UnknownName, "unknown named graph '" + name + "'");
}

}  // namespace expdom
