#include "expdom/heuristics.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "expdom/error.hpp"
#include "expdom/metrics.hpp"
#include "expdom/parallel.hpp"
#include "expdom/weights.hpp"

namespace expdom {

namespace {

// Ceiling of a positive double that errs upward when x sits within rounding
// distance of an integer; a larger d only strengthens the guarantee.
std::size_t safe_ceil(double x) {
  return static_cast<std::size_t>(std::ceil(x * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())));
}

}  // namespace

const char* param_mode_name(ParamMode mode) { return mode == ParamMode::Epsilon ? "epsilon" : "alpha"; }

HeuristicParams theorem6_params(ParamMode mode, double value, std::optional<std::size_t> n) {
  HeuristicParams out;
  out.mode = mode;
  out.value = value;
  out.n = n;
  if (mode == ParamMode::Epsilon) {
    if (!(value > 0.0 && value < 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "epsilon must satisfy 0 < eps < 1");
    }
    out.p = value / 3.0;
    out.d = std::max<std::size_t>(1, safe_ceil((3.0 / value) * std::log(3.0 / value)));
  } else {
    const double limit = 2.0 / (3.0 * std::log(2.0));
    if (!(value > 0.0 && value < limit)) {
      throw Error(ErrorKind::InvalidArgument, "alpha must satisfy 0 < alpha < 2/(3 ln 2)");
    }
    if (!n || *n < 3) throw Error(ErrorKind::InvalidArgument, "alpha mode needs n >= 3");
    const double ln_n = std::log(static_cast<double>(*n));
    out.p = std::log(ln_n) / ln_n;
    out.d = std::max<std::size_t>(1, safe_ceil(value * ln_n));
  }
  out.required_girth = 2 * out.d + 1;
  return out;
}

double theorem6_guarantee(const HeuristicParams& params) {
  return 1.5 * (params.p + std::exp(-params.p * static_cast<double>(params.d)));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = (seed ^ trial) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TrialReport randomized_expdom(const Graph& g, double p, std::uint64_t seed, std::size_t trials,
                              std::size_t threads) {
  if (!g.is_subcubic()) throw Error(ErrorKind::NotSubcubic, "the two-phase construction needs max degree <= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "p must lie in [0, 1]");
  const auto n = g.order();
  // Inclusion iff a uniform 64-bit draw falls below p * 2^64.
  const double scaled = std::ldexp(p, 64);
  const bool take_all = scaled >= std::ldexp(1.0, 64);
  const std::uint64_t threshold = take_all ? 0 : static_cast<std::uint64_t>(scaled);

  TrialReport report;
  report.seed = seed;
  report.p = p;
  report.trials.resize(trials);
  report.girth = graph_metrics(g).girth;
  std::vector<VertexSet> sets(trials);

  parallel_for(trials, threads, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    std::vector<Vertex> s0;
    for (Vertex v = 0; v < n; ++v) {
      const auto draw = rng();
      if (take_all || draw < threshold) s0.push_back(v);
    }
    const auto profile = weight_profile(g, s0, WeightMode::Blocked);
    std::vector<Vertex> all = s0;
    std::size_t s1 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (profile.weights[v] < Dyadic(1)) {
        all.push_back(v);
        ++s1;
      }
    }
    sets[t] = make_vertex_set(std::move(all));
    auto& record = report.trials[t];
    record.trial = t;
    record.s0 = s0.size();
    record.s1 = s1;
    record.size = sets[t].size();
    record.verified = is_exponential_dominating(g, sets[t]).ok;
  });

  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& r = report.trials[t];
    total += static_cast<double>(r.size);
    report.all_verified = report.all_verified && r.verified;
    if (t == 0 || r.size < report.min_size) {
      report.min_size = r.size;
      report.best_trial = t;
      report.best_set = sets[t];
    }
    if (t == 0 || r.size > report.max_size) report.max_size = r.size;
  }
  if (trials > 0) report.mean_size = total / static_cast<double>(trials);
  return report;
}

}  // namespace expdom
