#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "expdom/dyadic.hpp"
#include "expdom/graph.hpp"

namespace expdom {

/// Blocked: S-vertices block each other's influence. Porous: plain graph distance.
enum class WeightMode { Blocked, Porous };

const char* mode_name(WeightMode mode);

/**
 * Minimum length of a u-v path containing exactly one S-vertex, as an endpoint.
 * 0 for u == v in S; nullopt (infinite) when no such path exists.
 * Throws Precondition unless u or v is in S.
 */
std::optional<std::size_t> restricted_distance(const Graph& g, const VertexSet& set, Vertex u,
                                               Vertex v);

struct WeightProfile {
  WeightMode mode = WeightMode::Blocked;
  VertexSet set;
  std::vector<Dyadic> weights;  // indexed by vertex
};

/// Exact weight at every vertex; one BFS per member of S.
WeightProfile weight_profile(const Graph& g, const VertexSet& set, WeightMode mode);

struct DominationReport {
  bool ok = true;
  std::vector<std::pair<Vertex, Dyadic>> deficient;  // sorted by vertex
};

DominationReport is_exponential_dominating(const Graph& g, const VertexSet& set,
                                           WeightMode mode = WeightMode::Blocked);

/**
 * Level structure around u that stops at S-vertices: level_sizes[i] counts the
 * vertices whose S-avoiding distance from u is i, set_counts[i] those in S.
 */
struct ShellProfile {
  Vertex center = 0;
  std::vector<std::size_t> level_sizes;
  std::vector<std::size_t> set_counts;
  /// Number of non-empty levels.
  std::size_t truncation = 0;
  /// Per-level upper bound on level_sizes derived from the degree budget.
  std::vector<BigInt> level_bounds;
  bool bound_holds = true;
  std::optional<std::size_t> first_violation;

  /// sum_i set_counts[i] / 2^(i-1), which equals the blocked weight at the center.
  Dyadic weight() const;
};

/// Throws Precondition when u is in S.
ShellProfile shell_profile(const Graph& g, const VertexSet& set, Vertex u);

/// Tree inside G rooted at `root` that is full binary with exactly its S-vertices as leaves.
struct FullBinaryCert {
  Vertex root = 0;
  std::vector<Edge> edges;  // (parent, child)
  VertexSet leaves;

  VertexSet vertices() const;
};

/**
 * Returns the equality certificate when the blocked weight at u is exactly 2.
 * Requires a subcubic graph, deg(u) <= 2 and u not in S.
 */
std::optional<FullBinaryCert> lemma1_certificate(const Graph& g, const VertexSet& set, Vertex u);

/**
 * Reusable exact domination test for search loops. Uses fixed-point 128-bit
 * accumulators scaled by 2^n when n <= 100 (exact), otherwise falls back to
 * weight_profile.
 */
class DominationChecker {
 public:
  DominationChecker(const Graph& g, WeightMode mode);

  bool dominates(std::span<const Vertex> set);

  /// Every vertex outside S has weight >= threshold (a small positive integer).
  bool all_outside_at_least(std::span<const Vertex> set, unsigned threshold);

 private:
  void accumulate(std::span<const Vertex> set);

  const Graph& graph_;
  WeightMode mode_;
  bool fixed_point_;
  std::vector<unsigned __int128> acc_;
  std::vector<char> in_set_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

}  // namespace expdom
