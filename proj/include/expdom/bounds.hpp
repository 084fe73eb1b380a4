#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "expdom/graph.hpp"

namespace expdom {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" for integers.
std::string rational_string(const Rational& r);

/// gamma_e known exactly (lo == hi) or only bracketed.
struct GammaValue {
  std::size_t lo = 0;
  std::size_t hi = 0;
  static GammaValue exact(std::size_t v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
};

enum class BoundSide { Lower, Upper };

struct BoundRecord {
  std::string name;
  BoundSide side = BoundSide::Lower;
  /// Exact bound, or for the logarithmic bound a conservative rational bracket.
  Rational value;
  bool value_exact = true;
  double approx = 0.0;
  bool applicable = false;
  /// Not provably violated by the known gamma range.
  bool satisfied = true;
  /// gamma equals the bound exactly.
  bool tight = false;
  /// gamma equals the bound rounded towards gamma (ceil for lower, floor for upper).
  bool rounded_tight = false;
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool connected = false;
  bool subcubic = false;
  bool tree = false;
  std::optional<std::size_t> diameter;
  GammaValue gamma;
  std::optional<std::size_t> triple_size;
  std::vector<BoundRecord> bounds;

  bool all_satisfied() const;
  const BoundRecord* find(const std::string& name) const;
};

/**
 * Records, in order: diameter-lower, linear-upper (connected graphs),
 * subcubic-upper (connected, max degree 3), tree-lower (subcubic trees),
 * log-lower (max degree 3), triple-lower (max degree 3, n >= 3, triple_size given).
 */
BoundsReport bounds_report(const Graph& g, GammaValue gamma,
                           std::optional<std::size_t> triple_size = std::nullopt);

/// Exact test of gamma >= n / (6 log2(n+2) + 4), via 2^(n-4 gamma) <= (n+2)^(6 gamma).
bool log_lower_bound_holds(std::size_t n, std::size_t gamma);

struct ConjectureReport {
  std::size_t n_max = 0;
  /// Canonical codes of trees with gamma_e = (n+2)/3.
  std::vector<std::string> extremal;
  /// Canonical codes of the trees generated from K_1.
  std::vector<std::string> generated;
  std::vector<std::string> extremal_not_generated;
  std::vector<std::string> generated_not_extremal;
};

/// Exhaustive comparison for 1 <= n <= n_max (n_max <= 13), gamma_e by brute force.
ConjectureReport conjecture_experiment(std::size_t n_max, std::size_t threads = 1);

}  // namespace expdom
