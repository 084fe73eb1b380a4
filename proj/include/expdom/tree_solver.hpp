#pragma once

#include <vector>

#include "expdom/dyadic.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/graph.hpp"
#include "expdom/rooted_tree.hpp"

namespace expdom {

/// A component of T - S together with the S-vertices adjacent to it.
struct DecompositionPart {
  VertexSet vertices;  // includes the boundary
  VertexSet boundary;  // S-vertices of the part, each a leaf of the part
};

/// Parts ordered by their smallest non-S vertex. Throws NotATree for non-forests.
std::vector<DecompositionPart> decompose_by_S(const Graph& tree, const VertexSet& set);

/**
 * max over v in T_u of 2^dist(u,v) * (1 - w(v)), where w is the blocked weight in
 * the subtree T_u with the S-vertices it contains.
 */
Dyadic partial_deficiency(const RootedTree& t, const VertexSet& set, Vertex u);

/// partial_deficiency for every vertex, indexed by vertex.
std::vector<Dyadic> deficiency_table(const RootedTree& t, const VertexSet& set);

/**
 * Deepest non-root u with deficiency > 1 whose proper descendants all have
 * deficiency <= 1 (ties to the lowest id); the root when there is none.
 * Throws AlreadyDominating when S dominates t, Precondition when the root is in S.
 */
Vertex select_extension(const RootedTree& t, const VertexSet& set);

struct TreeTraceStep {
  std::size_t part = 0;
  Vertex root = 0;
  Vertex chosen = 0;
  /// Deficiency of every vertex of the part, in global ids.
  std::vector<std::pair<Vertex, Dyadic>> deficiency;
  /// Termination measure on the whole tree before and after the addition.
  std::size_t deficient_before = 0;
  std::size_t deficient_after = 0;
  Dyadic shortfall_before;  // sum of 1 - w over deficient vertices
  Dyadic shortfall_after;
};

struct TreeSolveResult {
  SolveResult result;
  std::vector<TreeTraceStep> trace;
};

/// Exact gamma_e of a subcubic tree. Throws NotATree or NotSubcubic.
TreeSolveResult gamma_e_tree(const Graph& tree, bool record_trace = false);

}  // namespace expdom
