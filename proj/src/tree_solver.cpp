#include "expdom/tree_solver.hpp"

#include <algorithm>

#include "expdom/error.hpp"
#include "expdom/weights.hpp"

namespace expdom {

namespace {

struct Shortfall {
  std::size_t count = 0;
  Dyadic total;
};

Shortfall measure(const Graph& g, const VertexSet& set) {
  const auto report = is_exponential_dominating(g, set);
  Shortfall s;
  s.count = report.deficient.size();
  for (const auto& [v, w] : report.deficient) s.total += Dyadic(1) - w;
  return s;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Positions of `members` inside the sorted list `universe`.
VertexSet localize(const VertexSet& universe, const VertexSet& members) {
  VertexSet out;
  for (Vertex v : members) {
    out.push_back(static_cast<Vertex>(std::lower_bound(universe.begin(), universe.end(), v) -
                                      universe.begin()));
  }
  return out;
}

}  // namespace

std::vector<DecompositionPart> decompose_by_S(const Graph& tree, const VertexSet& set) {
  if (!is_forest(tree)) throw Error(ErrorKind::NotATree, "decomposition requires an acyclic graph");
  const auto n = tree.order();
  const auto in_set = membership(set, n);
  std::vector<char> seen(n, 0);
  std::vector<DecompositionPart> parts;
  for (Vertex start = 0; start < n; ++start) {
    if (in_set[start] || seen[start]) continue;
    std::vector<Vertex> members;
    std::vector<Vertex> boundary;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Vertex y : tree.neighbors(x)) {
        if (in_set[y]) {
          boundary.push_back(y);
        } else if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    DecompositionPart part;
    part.boundary = make_vertex_set(boundary);
    members.insert(members.end(), part.boundary.begin(), part.boundary.end());
    part.vertices = make_vertex_set(members);
    parts.push_back(std::move(part));
  }
  return parts;
}

Dyadic partial_deficiency(const RootedTree& t, const VertexSet& set, Vertex u) {
  const auto members = t.subtree(u);
  const VertexSet sorted = make_vertex_set(members);
  const Graph sub = t.graph().induced(sorted);
  const VertexSet local_set = localize(sorted, intersect(sorted, set));
  const auto profile = weight_profile(sub, local_set, WeightMode::Blocked);
  std::optional<Dyadic> best;
  for (Vertex v : members) {
    const auto local = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    const auto dist = static_cast<std::int64_t>(t.depth(v) - t.depth(u));
    Dyadic value = (Dyadic(1) - profile.weights[local]).scaled(dist);
    if (!best || value > *best) best = std::move(value);
  }
  return *best;
}

std::vector<Dyadic> deficiency_table(const RootedTree& t, const VertexSet& set) {
  std::vector<Dyadic> table(t.order());
  for (Vertex u = 0; u < t.order(); ++u) table[u] = partial_deficiency(t, set, u);
  return table;
}

Vertex select_extension(const RootedTree& t, const VertexSet& set) {
  const auto in_set = membership(set, t.order());
  if (in_set[t.root()]) throw Error(ErrorKind::Precondition, "root must lie outside S");
  if (is_exponential_dominating(t.graph(), set).ok) {
    throw Error(ErrorKind::AlreadyDominating, "S already dominates the tree");
  }
  const auto table = deficiency_table(t, set);
  const Dyadic one(1);

  // below[u]: largest deficiency among proper descendants of u.
  std::vector<std::optional<Dyadic>> below(t.order());
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    for (Vertex c : t.children(u)) {
      const Dyadic& candidate = below[c] && *below[c] > table[c] ? *below[c] : table[c];
      if (!below[u] || candidate > *below[u]) below[u] = candidate;
    }
  }

  std::optional<Vertex> pick;
  for (Vertex u = 0; u < t.order(); ++u) {
    if (u == t.root() || in_set[u]) continue;
    if (!(table[u] > one)) continue;
    if (below[u] && *below[u] > one) continue;
    if (!pick || t.depth(u) > t.depth(*pick)) pick = u;
  }
  return pick.value_or(t.root());
}

TreeSolveResult gamma_e_tree(const Graph& tree, bool record_trace) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "tree solver requires a tree");
  if (!tree.is_subcubic()) throw Error(ErrorKind::NotSubcubic, "tree solver requires max degree <= 3");

  TreeSolveResult out;
  VertexSet set;
  Shortfall current = measure(tree, set);
  std::size_t iterations = 0;
  while (current.count > 0) {
    if (++iterations > tree.order()) {
      throw Error(ErrorKind::Integrity, "tree solver exceeded n additions");
    }
    const auto parts = decompose_by_S(tree, set);
    std::vector<char> deficient(tree.order(), 0);
    for (const auto& [v, w] : is_exponential_dominating(tree, set).deficient) deficient[v] = 1;

    std::size_t index = 0;
    while (index < parts.size() &&
           std::none_of(parts[index].vertices.begin(), parts[index].vertices.end(),
                        [&](Vertex v) { return deficient[v] != 0; })) {
      ++index;
    }
    if (index == parts.size()) throw Error(ErrorKind::Integrity, "deficient vertex outside every part");
    const auto& part = parts[index];

    const Graph local_graph = tree.induced(part.vertices);
    const VertexSet local_set = localize(part.vertices, part.boundary);
    Vertex local_root = 0;
    while (contains(local_set, local_root)) ++local_root;
    const RootedTree rooted(local_graph, local_root);
    const Vertex local_choice = select_extension(rooted, local_set);
    const Vertex chosen = part.vertices[local_choice];

    TreeTraceStep step;
    if (record_trace) {
      step.part = index;
      step.root = part.vertices[local_root];
      step.chosen = chosen;
      const auto table = deficiency_table(rooted, local_set);
      for (Vertex v = 0; v < table.size(); ++v) step.deficiency.emplace_back(part.vertices[v], table[v]);
      step.deficient_before = current.count;
      step.shortfall_before = current.total;
    }

    std::vector<Vertex> grown = set;
    grown.push_back(chosen);
    set = make_vertex_set(std::move(grown));
    current = measure(tree, set);

    if (record_trace) {
      step.deficient_after = current.count;
      step.shortfall_after = current.total;
      out.trace.push_back(std::move(step));
    }
  }

  out.result.value = set.size();
  out.result.witness = set;
  out.result.mode = WeightMode::Blocked;
  out.result.explored = iterations;
  out.result.proven_minimum = true;
  return out;
}

}  // namespace expdom
