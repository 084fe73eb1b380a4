#pragma once

#include <set>
#include <string>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

enum class ReductionRule { I = 1, II = 2, III = 3, IV = 4 };

/// How gamma_e(G) relates to gamma_e of the reduced graph.
enum class DeltaKind { Equal, PlusOne, AtMostPlusOne };

const char* rule_name(ReductionRule rule);  // "i", "ii", "iii", "iv"
ReductionRule parse_rule(const std::string& text);
const char* delta_name(DeltaKind delta);

/**
 * One applicable reduction site.
 *
 * I:   u (degree 3) has leaf neighbours v1 < v2; deletes v2.
 * II:  u has a leaf neighbour v1 and a neighbour v2 whose other neighbours are
 *      all leaves; deletes v1, v2 and those leaves.
 * III: neighbour v1 of degree 3 hangs a depth-2 tree whose two children w1 < w2
 *      both have children; deletes everything below v1 except w1.
 * IV:  neighbour v1 starts a pendant path v1-w-x; deletes it.
 */
struct ReductionStep {
  ReductionRule rule = ReductionRule::I;
  Vertex anchor = 0;
  Vertex primary = 0;  // v2 for rules I and II, v1 otherwise
  VertexSet removed;
  DeltaKind delta = DeltaKind::Equal;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// All sites ordered by (rule, anchor, primary). Throws NotSubcubic.
std::vector<ReductionStep> find_reductions(const Graph& g);

/// Deletes step.removed (remaining ids renumbered in order). Throws StaleStep.
Graph apply_reduction(const Graph& g, const ReductionStep& step);

struct ReduceResult {
  Graph graph;
  std::vector<ReductionStep> trace;
  /// gamma_e(original) - gamma_e(reduced) lies in [delta_min, delta_max].
  std::size_t delta_min = 0;
  std::size_t delta_max = 0;
  bool exact() const { return delta_min == delta_max; }
};

/// Rules I-III unless the caller opts into IV.
std::set<ReductionRule> default_rules();

ReduceResult reduce_fully(const Graph& g, const std::set<ReductionRule>& rules = default_rules());

}  // namespace expdom
