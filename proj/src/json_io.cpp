#include "expdom/json_io.hpp"

#include <string>

#include "expdom/error.hpp"

namespace expdom {

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  Json out{{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
  if (g.labels()) out["labels"] = *g.labels();
  return out;
}

Json to_json(const VertexSet& set) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(v);
  return out;
}

Json to_json(const WeightProfile& profile) {
  Json weights = Json::object();
  for (std::size_t v = 0; v < profile.weights.size(); ++v) {
    weights[std::to_string(v)] = profile.weights[v].to_string();
  }
  return {{"mode", mode_name(profile.mode)}, {"set", to_json(profile.set)}, {"weights", std::move(weights)}};
}

WeightProfile weight_profile_from_json(const Json& j, std::size_t n) {
  try {
    WeightProfile out;
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "blocked" && mode != "porous") throw Error(ErrorKind::InvalidArgument, "unknown mode " + mode);
    out.mode = mode == "blocked" ? WeightMode::Blocked : WeightMode::Porous;
    std::vector<Vertex> set;
    for (const auto& v : j.at("set")) set.push_back(v.get<Vertex>());
    out.set = make_vertex_set(set);
    membership(out.set, n);
    out.weights.assign(n, Dyadic());
    for (const auto& [key, value] : j.at("weights").items()) {
      const auto v = std::stoul(key);
      if (v >= n) throw Error(ErrorKind::VertexOutOfRange, "weight for vertex " + key);
      out.weights[v] = Dyadic::parse(value.get<std::string>());
    }
    return out;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed weight profile: ") + e.what());
  }
}

Json to_json(const DominationReport& report) {
  Json deficient = Json::array();
  for (const auto& [v, w] : report.deficient) deficient.push_back({{"vertex", v}, {"weight", w.to_string()}});
  return {{"ok", report.ok}, {"deficient", std::move(deficient)}};
}

Json to_json(const ShellProfile& p) {
  Json bounds = Json::array();
  for (const auto& b : p.level_bounds) bounds.push_back(b.str());
  return {{"center", p.center},
          {"level_sizes", p.level_sizes},
          {"set_counts", p.set_counts},
          {"truncation", p.truncation},
          {"level_bounds", std::move(bounds)},
          {"bound_holds", p.bound_holds},
          {"first_violation", optional_size(p.first_violation)},
          {"weight", p.weight().to_string()}};
}

Json to_json(const FullBinaryCert& cert) {
  Json edges = Json::array();
  for (const auto& [a, b] : cert.edges) edges.push_back({a, b});
  return {{"root", cert.root}, {"edges", std::move(edges)}, {"leaves", to_json(cert.leaves)}};
}

Json to_json(const GraphMetrics& m) {
  Json ecc = Json::array();
  for (const auto& e : m.eccentricities) ecc.push_back(optional_size(e));
  return {{"degree_histogram", m.degree_histogram},
          {"max_degree", m.max_degree},
          {"connected", m.connected},
          {"girth", optional_size(m.girth)},
          {"diameter", optional_size(m.diameter)},
          {"eccentricities", std::move(ecc)}};
}

Json to_json(const SolveResult& r) {
  return {{"gamma_e", r.value},
          {"witness", to_json(r.witness)},
          {"mode", mode_name(r.mode)},
          {"explored", r.explored},
          {"proven_minimum", r.proven_minimum}};
}

Json to_json(const TreeTraceStep& s) {
  Json table = Json::object();
  for (const auto& [v, d] : s.deficiency) table[std::to_string(v)] = d.to_string();
  return {{"part", s.part},
          {"root", s.root},
          {"chosen", s.chosen},
          {"deficiency", std::move(table)},
          {"deficient_before", s.deficient_before},
          {"deficient_after", s.deficient_after},
          {"shortfall_before", s.shortfall_before.to_string()},
          {"shortfall_after", s.shortfall_after.to_string()}};
}

Json to_json(const ReductionStep& s) {
  return {{"rule", rule_name(s.rule)},
          {"anchor", s.anchor},
          {"primary", s.primary},
          {"removed", to_json(s.removed)},
          {"added", Json::array()},
          {"delta", delta_name(s.delta)}};
}

Json to_json(const ReduceResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  return {{"graph", to_json(r.graph)},
          {"trace", std::move(trace)},
          {"delta", {{"min", r.delta_min}, {"max", r.delta_max}, {"exact", r.exact()}}}};
}

Json to_json(const HeuristicParams& p) {
  return {{"mode", param_mode_name(p.mode)},
          {"value", p.value},
          {"n", optional_size(p.n)},
          {"p", p.p},
          {"d", p.d},
          {"required_girth", p.required_girth},
          {"guarantee", theorem6_guarantee(p)}};
}

Json to_json(const TrialReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"trial", t.trial}, {"s0", t.s0}, {"s1", t.s1}, {"size", t.size}, {"verified", t.verified}});
  }
  return {{"seed", r.seed},
          {"p", r.p},
          {"trial_count", r.trials.size()},
          {"best_trial", r.best_trial},
          {"best_set", to_json(r.best_set)},
          {"mean_size", r.mean_size},
          {"min_size", r.min_size},
          {"max_size", r.max_size},
          {"all_verified", r.all_verified},
          {"girth", optional_size(r.girth)},
          {"trials", std::move(trials)}};
}

Json to_json(const BoundsReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name},
                      {"side", b.side == BoundSide::Lower ? "lower" : "upper"},
                      {"value", rational_string(b.value)},
                      {"value_exact", b.value_exact},
                      {"approx", b.approx},
                      {"applicable", b.applicable},
                      {"satisfied", b.satisfied},
                      {"tight", b.tight},
                      {"rounded_tight", b.rounded_tight}});
  }
  return {{"n", r.n},
          {"m", r.m},
          {"connected", r.connected},
          {"subcubic", r.subcubic},
          {"tree", r.tree},
          {"diameter", optional_size(r.diameter)},
          {"gamma_e", {{"lo", r.gamma.lo}, {"hi", r.gamma.hi}, {"exact", r.gamma.is_exact()}}},
          {"triple_size", optional_size(r.triple_size)},
          {"all_satisfied", r.all_satisfied()},
          {"bounds", std::move(bounds)}};
}

Json to_json(const ConjectureReport& r) {
  return {{"n_max", r.n_max},
          {"extremal_count", r.extremal.size()},
          {"generated_count", r.generated.size()},
          {"extremal", r.extremal},
          {"generated", r.generated},
          {"extremal_not_generated", r.extremal_not_generated},
          {"generated_not_extremal", r.generated_not_extremal}};
}

Json to_json(const GadgetMap& map) {
  Json edges = Json::array();
  for (const auto& e : map.edges) {
    edges.push_back({{"u", e.u},
                     {"v", e.v},
                     {"p", e.p},
                     {"q", e.q},
                     {"x_set", to_json(e.x_set())},
                     {"y_set", to_json(e.y_set())},
                     {"triple_u", to_json(e.triple_u())},
                     {"triple_v", to_json(e.triple_v())}});
  }
  return {{"source", to_json(map.source)}, {"n", map.gadget.order()}, {"edges", std::move(edges)}};
}

Json to_json(const CoverExtraction& x) {
  Json steps = Json::array();
  for (const auto& s : x.steps) {
    steps.push_back({{"rule", s.rule},
                     {"edge", s.edge},
                     {"side", s.side},
                     {"removed", to_json(s.removed)},
                     {"added", to_json(s.added)},
                     {"size_before", s.size_before},
                     {"size_after", s.size_after},
                     {"cover_before", s.cover_before},
                     {"cover_after", s.cover_after}});
  }
  return {{"cover", to_json(x.cover)}, {"final_set", to_json(x.final_set)}, {"steps", std::move(steps)}};
}

}  // namespace expdom
