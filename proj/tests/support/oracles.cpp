#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace oracle {

namespace {

// Distance from s to every vertex along paths whose interior avoids S.
std::vector<long> blocked_bfs(const Graph& g, Vertex s, const std::vector<bool>& in_set, bool porous) {
  std::vector<long> dist(g.order(), -1);
  std::deque<Vertex> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (x != s && in_set[x] && !porous) continue;  // reached, but cannot pass through
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return dist;
}

std::string rooted_code(const Graph& t, Vertex v, long parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (static_cast<long>(w) != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.rbegin(), kids.rend());
  std::string s = "1";
  for (auto& k : kids) s += k;
  return s + "0";
}

}  // namespace

std::vector<Dyadic> naive_weights(const Graph& g, const VertexSet& set, bool porous) {
  std::vector<bool> in_set(g.order(), false);
  for (Vertex s : set) in_set[s] = true;
  std::vector<Dyadic> w(g.order());
  for (Vertex s : set) {
    const auto dist = blocked_bfs(g, s, in_set, porous);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] < 0) continue;
      // A blocked BFS still labels other S-vertices; their distance does not count.
      if (!porous && v != s && in_set[v]) continue;
      w[v] += Dyadic::pow2(1 - dist[v]);
    }
  }
  if (!porous) {
    for (Vertex s : set) w[s] = Dyadic(2);
  }
  return w;
}

bool naive_dominates(const Graph& g, const VertexSet& set) {
  const auto w = naive_weights(g, set);
  return std::all_of(w.begin(), w.end(), [](const Dyadic& x) { return x >= Dyadic(1); });
}

std::size_t brute_gamma(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return 0;
  std::vector<std::uint32_t> masks(1u << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (auto m : masks) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (m >> v & 1) s.push_back(v);
    }
    if (naive_dominates(g, s)) return s.size();
  }
  return n;
}

std::vector<std::vector<long>> all_pairs(const Graph& g) {
  const auto n = g.order();
  const long inf = static_cast<long>(n) + 1;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

std::optional<std::size_t> naive_diameter(const Graph& g) {
  const auto d = all_pairs(g);
  long best = 0;
  for (const auto& row : d) {
    for (auto x : row) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return static_cast<std::size_t>(best);
}

std::optional<std::size_t> naive_girth(const Graph& g) {
  std::optional<std::size_t> best;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<expdom::Edge> rest;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i) rest.push_back(edges[j]);
    }
    const Graph h(g.order(), rest);
    const auto d = all_pairs(h);
    const long len = d[edges[i].first][edges[i].second];
    if (len >= 0 && (!best || static_cast<std::size_t>(len + 1) < *best)) best = static_cast<std::size_t>(len + 1);
  }
  return best;
}

std::string tree_signature(const Graph& tree) {
  std::string best;
  for (Vertex r = 0; r < tree.order(); ++r) {
    auto c = rooted_code(tree, r, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

std::vector<std::string> trees_by_composition(std::size_t n) {
  // rooted[k][c]: rooted trees (as edge lists on 0..k-1, root 0) with k vertices,
  // root having at most c children and every other vertex at most 2.
  using EdgeList = std::vector<expdom::Edge>;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeList>> memo;
  std::function<const std::vector<EdgeList>&(std::size_t, std::size_t)> rooted =
      [&](std::size_t k, std::size_t c) -> const std::vector<EdgeList>& {
    auto key = std::make_pair(k, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<EdgeList> out;
    if (k == 1) {
      out.push_back({});
    } else if (c > 0) {
      // first child subtree of size s, remainder is a root with c-1 children budget
      for (std::size_t s = 1; s < k; ++s) {
        const auto child = rooted(s, 2);
        const auto rest = rooted(k - s, c - 1);
        for (const auto& a : child) {
          for (const auto& b : rest) {
            EdgeList e = b;  // root 0 and rest on 0..k-s-1
            const auto off = static_cast<Vertex>(k - s);
            e.emplace_back(0, off);
            for (auto [x, y] : a) e.emplace_back(x + off, y + off);
            out.push_back(std::move(e));
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::set<std::string> sigs;
  for (const auto& e : rooted(n, 3)) sigs.insert(tree_signature(Graph(n, e)));
  return {sigs.begin(), sigs.end()};
}

std::vector<std::string> trees_by_reverse_growth(std::size_t n) {
  std::map<std::string, Graph> level{{tree_signature(Graph(1)), Graph(1)}};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [sig, t] : level) {
      for (Vertex v = static_cast<Vertex>(t.order()); v-- > 0;) {
        if (t.degree(v) >= 3) continue;
        auto e = t.edges();
        e.emplace_back(v, static_cast<Vertex>(k));
        Graph g(k + 1, e);
        next.emplace(tree_signature(g), g);
      }
    }
    level = std::move(next);
  }
  std::vector<std::string> out;
  for (const auto& [sig, t] : level) out.push_back(sig);
  return out;
}

Graph random_subcubic_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<expdom::Edge> edges;
  std::vector<int> deg(n, 0);
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u) {
      if (deg[u] < 3) open.push_back(u);
    }
    const Vertex u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return Graph(n, edges);
}

Graph random_subcubic_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<expdom::Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<int> deg(n, 0);
  std::vector<expdom::Edge> edges;
  for (auto [u, v] : all) {
    if (deg[u] < 3 && deg[v] < 3 && keep(rng)) {
      edges.emplace_back(u, v);
      ++deg[u];
      ++deg[v];
    }
  }
  return Graph(n, edges);
}

Graph random_connected_subcubic(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  const Graph t = random_subcubic_tree(n, rng);
  auto edges = t.edges();
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::set<expdom::Edge> have(edges.begin(), edges.end());
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t tries = 0; tries < 50 * (extra + 1) && extra > 0; ++tries) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (deg[u] >= 3 || deg[v] >= 3 || have.count({u, v})) continue;
    have.insert({u, v});
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
    --extra;
  }
  return Graph(n, edges);
}

VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution take(p);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) {
    if (take(rng)) s.push_back(v);
  }
  return s;
}

Graph path(std::size_t n) {
  std::vector<expdom::Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

}  // namespace oracle
