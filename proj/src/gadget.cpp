#include "expdom/gadget.hpp"

#include <algorithm>

#include "expdom/error.hpp"
#include "expdom/weights.hpp"

namespace expdom {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_meet(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t source_part(const VertexSet& set, std::size_t n) {
  return static_cast<std::size_t>(
      std::lower_bound(set.begin(), set.end(), static_cast<Vertex>(n)) - set.begin());
}

// The gadget seen from `side`: p1/q2 belong to that endpoint.
struct Oriented {
  Vertex near;
  Vertex far;
  Vertex p1;
  Vertex p2;
  Vertex q2;
  VertexSet triple;
};

Oriented orient(const GadgetEdge& e, bool from_u) {
  if (from_u) return {e.u, e.v, e.path(1), e.path(2), e.bottom(2), e.triple_u()};
  return {e.v, e.u, e.path(6), e.path(5), e.bottom(5), e.triple_v()};
}

}  // namespace

VertexSet GadgetEdge::x_set() const {
  return make_vertex_set({p[1], p[2], p[3], p[4], q[0], q[1], q[2], q[3]});
}

VertexSet GadgetEdge::y_set() const {
  auto out = x_set();
  out.insert(out.end(), {u, v, p[0], p[5]});
  return make_vertex_set(out);
}

VertexSet GadgetEdge::triple_u() const { return make_vertex_set({u, path(3), path(5)}); }
VertexSet GadgetEdge::triple_v() const { return make_vertex_set({v, path(4), path(2)}); }

GadgetMap build_gadget(const Graph& g) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "gadget construction needs a cubic graph");
  GadgetMap map;
  map.source = g;
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  Vertex next = n;
  for (const auto& [u, v] : g.edges()) {
    GadgetEdge e;
    e.u = u;
    e.v = v;
    for (auto& x : e.p) x = next++;
    for (auto& x : e.q) x = next++;
    edges.emplace_back(u, e.path(1));
    for (int i = 1; i < 6; ++i) edges.emplace_back(e.path(i), e.path(i + 1));
    edges.emplace_back(e.path(6), v);
    edges.emplace_back(e.bottom(2), e.path(1));
    edges.emplace_back(e.bottom(2), e.path(2));
    edges.emplace_back(e.bottom(3), e.path(3));
    edges.emplace_back(e.bottom(4), e.path(4));
    edges.emplace_back(e.bottom(5), e.path(5));
    edges.emplace_back(e.bottom(5), e.path(6));
    map.edges.push_back(e);
  }
  map.gadget = Graph(next, edges);
  return map;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  const auto in = membership(cover, g.order());
  const auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

VertexSet minimum_vertex_cover(const Graph& g) {
  const auto n = g.order();
  if (n > 32) throw Error(ErrorKind::Guard, "vertex cover search is limited to n <= 32");
  const auto edges = g.edges();
  std::uint64_t best = (1ULL << n) - 1;
  int best_size = static_cast<int>(n);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size >= best_size) continue;
    bool ok = true;
    for (const auto& [a, b] : edges) {
      if (!((mask >> a) & 1) && !((mask >> b) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = mask;
      best_size = size;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if ((best >> v) & 1) out.push_back(v);
  }
  return out;
}

VertexSet cover_to_expdom(const GadgetMap& map, const VertexSet& cover,
                          const std::optional<std::vector<Vertex>>& choice) {
  const auto n = map.source.order();
  const auto in = membership(cover, n);
  if (!is_vertex_cover(map.source, cover)) throw Error(ErrorKind::NotACover, "set is not a vertex cover");
  if (choice && choice->size() != map.edges.size()) {
    throw Error(ErrorKind::InvalidArgument, "edge choice must name one endpoint per edge");
  }
  std::vector<Vertex> out(cover.begin(), cover.end());
  for (std::size_t i = 0; i < map.edges.size(); ++i) {
    const auto& e = map.edges[i];
    Vertex x = in[e.u] ? e.u : e.v;
    if (choice) {
      x = (*choice)[i];
      if ((x != e.u && x != e.v) || !in[x]) {
        throw Error(ErrorKind::InvalidArgument, "edge choice must be a cover endpoint of its edge");
      }
    }
    if (x == e.u) {
      out.insert(out.end(), {e.path(3), e.path(5)});
    } else {
      out.insert(out.end(), {e.path(4), e.path(2)});
    }
  }
  return make_vertex_set(out);
}

CoverExtraction expdom_to_cover(const GadgetMap& map, const VertexSet& set) {
  const auto& h = map.gadget;
  const auto n = map.source.order();
  DominationChecker checker(h, WeightMode::Blocked);
  if (!checker.dominates(set)) throw Error(ErrorKind::NotDominating, "input set does not dominate");

  CoverExtraction out;
  VertexSet current = set;

  auto try_rewrite = [&](const char* rule, std::size_t index, Vertex side, const VertexSet& removed,
                         const VertexSet& added) {
    VertexSet next = set_union(set_minus(current, removed), added);
    RewriteStep step{rule, index, side, set_minus(current, next), set_minus(next, current),
                     current.size(), next.size(), source_part(current, n), source_part(next, n)};
    if (step.size_after > step.size_before) {
      throw Error(ErrorKind::Integrity, std::string(rule) + " would enlarge the set");
    }
    if (step.cover_after <= step.cover_before) {
      throw Error(ErrorKind::Integrity, std::string(rule) + " did not gain a source vertex");
    }
    if (!checker.dominates(next)) {
      throw Error(ErrorKind::Integrity, std::string(rule) + " on edge " + std::to_string(index) +
                                            " broke exponential domination");
    }
    out.steps.push_back(std::move(step));
    current = std::move(next);
  };

  // One rewrite per pass, earliest (rule, edge, side) first, until nothing applies.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int rule = 1; rule <= 4 && !changed; ++rule) {
      for (std::size_t i = 0; i < map.edges.size() && !changed; ++i) {
        const auto& e = map.edges[i];
        const auto y = set_meet(current, e.y_set());
        const bool has_u = contains(current, e.u);
        const bool has_v = contains(current, e.v);
        for (bool from_u : {true, false}) {
          const auto o = orient(e, from_u);
          const bool has_near = contains(current, o.near);
          if (rule == 1 && !has_near && contains(current, o.p1)) {
            auto removed = set_meet(current, e.x_set());
            removed.push_back(o.p1);
            try_rewrite("R1", i, o.near, make_vertex_set(removed), o.triple);
          } else if (rule == 2 && !has_near && contains(current, o.p2) && contains(current, o.q2)) {
            try_rewrite("R2", i, o.near, {o.q2}, {o.near});
          } else if (rule == 3 && from_u && !has_u && !has_v && y.size() == 3) {
            // Orient away from a selected p6 so the vacated side stays covered.
            const auto mirrored = orient(e, !contains(current, e.path(6)));
            try_rewrite("R3", i, mirrored.near, y, mirrored.triple);
          } else if (rule == 4 && from_u && !has_u && !has_v && y.size() >= 4) {
            try_rewrite("R4", i, e.u, y, set_union(o.triple, {o.far}));
          } else {
            continue;
          }
          changed = true;
          break;
        }
      }
    }
  }

  out.final_set = current;
  out.cover = VertexSet(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(source_part(current, n)));
  if (!is_vertex_cover(map.source, out.cover)) {
    throw Error(ErrorKind::Integrity, "rewritten set does not induce a vertex cover");
  }
  if (out.cover.size() + 3 * n > set.size()) {
    throw Error(ErrorKind::Integrity, "extracted cover is larger than |S| - 3n(G)");
  }
  return out;
}

}  // namespace expdom
