#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

/**
 * The ten vertices replacing an edge uv (u < v). The path u-p1-...-p6-v runs
 * along the top; q2 is adjacent to p1 and p2, q5 to p5 and p6, q3 and q4 hang
 * off p3 and p4.
 */
struct GadgetEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::array<Vertex, 6> p{};  // p[0] = p1 ... p[5] = p6
  std::array<Vertex, 4> q{};  // q[0] = q2 ... q[3] = q5

  Vertex path(int i) const { return p[static_cast<std::size_t>(i - 1)]; }
  Vertex bottom(int i) const { return q[static_cast<std::size_t>(i - 2)]; }

  /// p2..p5 and q2..q5.
  VertexSet x_set() const;
  /// x_set plus u, p1, p6, v.
  VertexSet y_set() const;
  /// {u, p3, p5}.
  VertexSet triple_u() const;
  /// {v, p4, p2}.
  VertexSet triple_v() const;
};

struct GadgetMap {
  Graph source;
  Graph gadget;
  std::vector<GadgetEdge> edges;  // in source edge order
};

/// Throws NotCubic. Source vertices keep their ids; edge i owns ids n + 10i .. n + 10i + 9.
GadgetMap build_gadget(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// Smallest vertex cover by size-ordered search (n <= 32).
VertexSet minimum_vertex_cover(const Graph& g);

/**
 * S = cover plus, per edge, the two path vertices completing the triple on the
 * side of choice[e] (default: the lowest-id cover endpoint). Throws NotACover or
 * InvalidArgument for a bad choice.
 */
VertexSet cover_to_expdom(const GadgetMap& map, const VertexSet& cover,
                          const std::optional<std::vector<Vertex>>& choice = std::nullopt);

struct RewriteStep {
  std::string rule;  // "R1".."R4"
  std::size_t edge = 0;
  Vertex side = 0;  // the endpoint playing the u role
  VertexSet removed;
  VertexSet added;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  std::size_t cover_before = 0;  // |S ∩ V(G)|
  std::size_t cover_after = 0;
};

struct CoverExtraction {
  VertexSet cover;
  VertexSet final_set;
  std::vector<RewriteStep> steps;
};

/**
 * Rewrites an exponential dominating set of the gadget graph edge by edge until
 * no local rule applies, re-verifying domination after every rewrite, then
 * returns S ∩ V(G). Throws NotDominating for bad input and Integrity when a
 * rewrite loses domination, grows S, or the final set is not a small enough cover.
 */
CoverExtraction expdom_to_cover(const GadgetMap& map, const VertexSet& set);

}  // namespace expdom
