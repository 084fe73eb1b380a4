#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expdom/json_io.hpp"

namespace expdom {

inline constexpr const char* kCsvVersionLine = "# expdom-experiment-csv v1";

/// One concrete graph produced by expanding a config instance entry.
struct ExperimentInstance {
  std::string name;
  std::string kind;
  Graph graph;
  std::optional<VertexSet> provided;  // a known dominating set, if the generator has one
};

/**
 * Instance kinds: file {path}, figure2 {k}, extremal-ops {max_n}, named {name},
 * gadget {name | path}, degree5 {h}, trees {min_n, max_n}.
 * Throws UnknownName for other kinds.
 */
std::vector<ExperimentInstance> expand_instances(const Json& config);

struct ExperimentOutput {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Json json;

  std::string csv() const;
};

/**
 * Config: {"instances": [...], "solvers": ["exact" | "tree" | "heuristic" | "provided"],
 * "seed": int, "trials": int, "p": float}. Rows are in (instance, solver) order and
 * independent of `threads`. An exactly solved instance that violates an applicable
 * bound raises BoundViolation; the offending case is written to `dump_dir` when given.
 */
ExperimentOutput run_experiment(const Json& config, std::size_t threads = 1,
                                const std::optional<std::string>& dump_dir = std::nullopt);

/// Runs the experiment and writes results.csv and results.json into out_dir.
ExperimentOutput run_experiment_to(const Json& config, const std::string& out_dir, std::size_t threads = 1);

}  // namespace expdom
