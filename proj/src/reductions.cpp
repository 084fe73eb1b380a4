#include "expdom/reductions.hpp"

#include <algorithm>
#include <optional>

#include "expdom/error.hpp"

namespace expdom {

namespace {

// Component of G - u containing v, as BFS layers from v; nullopt unless it is a tree.
std::optional<std::vector<std::vector<Vertex>>> pendant_tree(const Graph& g, Vertex u, Vertex v) {
  std::vector<char> seen(g.order(), 0);
  seen[u] = 1;
  seen[v] = 1;
  std::vector<std::vector<Vertex>> layers{{v}};
  std::size_t vertices = 1;
  std::size_t degree_sum = 0;
  while (!layers.back().empty()) {
    std::vector<Vertex> next;
    for (Vertex x : layers.back()) {
      for (Vertex y : g.neighbors(x)) {
        if (y == u) continue;
        ++degree_sum;
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    }
    vertices += next.size();
    layers.push_back(std::move(next));
  }
  layers.pop_back();
  if (degree_sum != 2 * (vertices - 1)) return std::nullopt;
  return layers;
}

bool is_leaf(const Graph& g, Vertex v) { return g.degree(v) == 1; }

}  // namespace

const char* rule_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::I: return "i";
    case ReductionRule::II: return "ii";
    case ReductionRule::III: return "iii";
    case ReductionRule::IV: return "iv";
  }
  return "?";
}

ReductionRule parse_rule(const std::string& text) {
  if (text == "i") return ReductionRule::I;
  if (text == "ii") return ReductionRule::II;
  if (text == "iii") return ReductionRule::III;
  if (text == "iv") return ReductionRule::IV;
  throw Error(ErrorKind::InvalidArgument, "unknown reduction rule '" + text + "'");
}

const char* delta_name(DeltaKind delta) {
  switch (delta) {
    case DeltaKind::Equal: return "equal";
    case DeltaKind::PlusOne: return "plus-one";
    case DeltaKind::AtMostPlusOne: return "at-most-plus-one";
  }
  return "?";
}

std::vector<ReductionStep> find_reductions(const Graph& g) {
  if (!g.is_subcubic()) throw Error(ErrorKind::NotSubcubic, "reductions require max degree <= 3");
  std::vector<ReductionStep> sites;
  const auto n = g.order();

  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> leaves;
    for (Vertex v : g.neighbors(u)) {
      if (is_leaf(g, v)) leaves.push_back(v);
    }
    if (g.degree(u) == 3 && leaves.size() >= 2) {
      sites.push_back({ReductionRule::I, u, leaves[1], {leaves[1]}, DeltaKind::Equal});
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    std::optional<Vertex> v1;
    for (Vertex v : g.neighbors(u)) {
      if (is_leaf(g, v)) {
        v1 = v;
        break;
      }
    }
    if (!v1) continue;
    for (Vertex v2 : g.neighbors(u)) {
      if (v2 == *v1) continue;
      const auto layers = pendant_tree(g, u, v2);
      if (!layers || layers->size() != 2) continue;
      std::vector<Vertex> removed{*v1};
      for (const auto& layer : *layers) removed.insert(removed.end(), layer.begin(), layer.end());
      sites.push_back({ReductionRule::II, u, v2, make_vertex_set(removed), DeltaKind::PlusOne});
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v1 : g.neighbors(u)) {
      if (g.degree(v1) != 3) continue;
      const auto layers = pendant_tree(g, u, v1);
      if (!layers || layers->size() != 3) continue;
      const auto& children = (*layers)[1];
      const bool both_inner = std::all_of(children.begin(), children.end(),
                                          [&](Vertex w) { return g.degree(w) >= 2; });
      if (children.size() != 2 || !both_inner) continue;
      const Vertex w1 = std::min(children[0], children[1]);
      std::vector<Vertex> removed;
      for (const auto& layer : *layers) {
        for (Vertex x : layer) {
          if (x != v1 && x != w1) removed.push_back(x);
        }
      }
      sites.push_back({ReductionRule::III, u, v1, make_vertex_set(removed), DeltaKind::PlusOne});
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v1 : g.neighbors(u)) {
      if (g.degree(v1) != 2) continue;
      const auto layers = pendant_tree(g, u, v1);
      if (!layers || layers->size() != 3 || (*layers)[1].size() != 1 || (*layers)[2].size() != 1) {
        continue;
      }
      const std::vector<Vertex> removed{v1, (*layers)[1][0], (*layers)[2][0]};
      sites.push_back({ReductionRule::IV, u, v1, make_vertex_set(removed), DeltaKind::AtMostPlusOne});
    }
  }
  return sites;
}

Graph apply_reduction(const Graph& g, const ReductionStep& step) {
  const auto sites = find_reductions(g);
  if (std::find(sites.begin(), sites.end(), step) == sites.end()) {
    throw Error(ErrorKind::StaleStep, std::string("reduction ") + rule_name(step.rule) +
                                          " at vertex " + std::to_string(step.anchor) +
                                          " does not apply to this graph");
  }
  return g.without(step.removed);
}

std::set<ReductionRule> default_rules() {
  return {ReductionRule::I, ReductionRule::II, ReductionRule::III};
}

ReduceResult reduce_fully(const Graph& g, const std::set<ReductionRule>& rules) {
  ReduceResult out;
  out.graph = g;
  while (true) {
    const auto sites = find_reductions(out.graph);
    const auto site = std::find_if(sites.begin(), sites.end(),
                                   [&](const ReductionStep& s) { return rules.count(s.rule) > 0; });
    if (site == sites.end()) break;
    out.graph = out.graph.without(site->removed);
    if (site->delta == DeltaKind::PlusOne) {
      ++out.delta_min;
      ++out.delta_max;
    } else if (site->delta == DeltaKind::AtMostPlusOne) {
      ++out.delta_max;
    }
    out.trace.push_back(*site);
  }
  return out;
}

}  // namespace expdom
