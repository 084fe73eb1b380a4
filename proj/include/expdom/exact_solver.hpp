#pragma once

#include <cstdint>
#include <optional>

#include "expdom/graph.hpp"
#include "expdom/weights.hpp"

namespace expdom {

inline constexpr std::size_t kExactGuard = 32;
inline constexpr std::size_t kTripleGuard = 24;

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  WeightMode mode = WeightMode::Blocked;
  std::uint64_t explored = 0;  // candidate sets tested
  bool proven_minimum = false;
};

struct ExactOptions {
  WeightMode mode = WeightMode::Blocked;
  /// Largest subset size to try; BudgetExhausted is thrown past it.
  std::optional<std::size_t> max_k;
  /// Lifts the order guard.
  bool force = false;
};

/**
 * Minimum exponential dominating set by size-ordered search (colex order
 * within a size, first hit wins). On subcubic graphs in blocked mode a branch
 * is skipped when even its largest completion fails to dominate.
 */
SolveResult gamma_e_exact(const Graph& g, const ExactOptions& options = {});

/**
 * Minimum S such that every vertex outside S has blocked weight >= 3.
 * Vertices of degree <= 2 are always in S. Requires a subcubic graph, 3 <= n <= 24
 * unless forced.
 */
SolveResult min_triple_weight_set(const Graph& g, bool force = false);

}  // namespace expdom
