#pragma once

#include <json.hpp>

#include "expdom/bounds.hpp"
#include "expdom/constructions.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/gadget.hpp"
#include "expdom/graph.hpp"
#include "expdom/heuristics.hpp"
#include "expdom/metrics.hpp"
#include "expdom/reductions.hpp"
#include "expdom/tree_solver.hpp"
#include "expdom/weights.hpp"

namespace expdom {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const VertexSet& set);
Json to_json(const WeightProfile& profile);
Json to_json(const DominationReport& report);
Json to_json(const ShellProfile& profile);
Json to_json(const FullBinaryCert& cert);
Json to_json(const GraphMetrics& metrics);
Json to_json(const SolveResult& result);
Json to_json(const TreeTraceStep& step);
Json to_json(const ReductionStep& step);
Json to_json(const ReduceResult& result);
Json to_json(const HeuristicParams& params);
Json to_json(const TrialReport& report);
Json to_json(const BoundsReport& report);
Json to_json(const ConjectureReport& report);
Json to_json(const GadgetMap& map);
Json to_json(const CoverExtraction& extraction);

/// Inverse of to_json(const WeightProfile&), checked against the graph order.
WeightProfile weight_profile_from_json(const Json& j, std::size_t n);

}  // namespace expdom
