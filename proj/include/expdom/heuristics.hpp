#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

enum class ParamMode { Epsilon, Alpha };

const char* param_mode_name(ParamMode mode);

struct HeuristicParams {
  ParamMode mode = ParamMode::Epsilon;
  double value = 0.0;
  std::optional<std::size_t> n;
  double p = 0.0;
  std::size_t d = 1;
  std::size_t required_girth = 3;  // 2d + 1
};

/**
 * epsilon: p = eps/3, d = ceil((3/eps) ln(3/eps)), 0 < eps < 1.
 * alpha:   p = ln(ln n)/ln n, d = ceil(alpha ln n), 0 < alpha < 2/(3 ln 2), n >= 3.
 */
HeuristicParams theorem6_params(ParamMode mode, double value, std::optional<std::size_t> n = std::nullopt);

/// 3/2 (p + e^(-p d)), the expected relative size bound.
double theorem6_guarantee(const HeuristicParams& params);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t s0 = 0;
  std::size_t s1 = 0;
  std::size_t size = 0;
  bool verified = false;
};

struct TrialReport {
  std::uint64_t seed = 0;
  double p = 0.0;
  std::vector<TrialRecord> trials;
  VertexSet best_set;
  std::uint64_t best_trial = 0;
  double mean_size = 0.0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  bool all_verified = true;
  std::optional<std::size_t> girth;
};

/// Per-trial generator seed: splitmix64(seed ^ trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/**
 * Each trial samples S0 with inclusion probability p, adds every vertex of
 * blocked weight < 1 (S1) and verifies the union exactly. Throws NotSubcubic.
 */
TrialReport randomized_expdom(const Graph& g, double p, std::uint64_t seed, std::size_t trials,
                              std::size_t threads = 1);

}  // namespace expdom
