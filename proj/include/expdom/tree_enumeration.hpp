#pragma once

#include <functional>
#include <string>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

inline constexpr std::size_t kMaxEnumerationOrder = 16;

/**
 * Canonical code of a free tree: the nested-parenthesis encoding rooted at its
 * center (lexicographically smaller of the two rootings for a bicentral tree).
 * Two trees are isomorphic iff their codes are equal. Throws NotATree.
 */
std::string canonical_tree_code(const Graph& tree);

/// Tree whose vertices are numbered in preorder of the canonical encoding.
Graph tree_from_code(const std::string& code);

/**
 * One representative per isomorphism class of trees of order n with maximum
 * degree <= 3, sorted by canonical code. Guarded to 1 <= n <= 16.
 */
std::vector<Graph> enumerate_subcubic_trees(std::size_t n);

/// Streaming form; stops early when the callback returns false.
void for_each_subcubic_tree(std::size_t n, const std::function<bool(const Graph&)>& visit);

}  // namespace expdom
