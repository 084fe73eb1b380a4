#include "expdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>

#include "expdom/constructions.hpp"
#include "expdom/error.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/metrics.hpp"
#include "expdom/parallel.hpp"
#include "expdom/tree_enumeration.hpp"

namespace expdom {

namespace {

Rational frac(std::size_t num, std::size_t den) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor_of(const Rational& r) {
  return numerator(r) / denominator(r);  // non-negative operands only
}

BigInt ceil_of(const Rational& r) {
  const BigInt q = numerator(r) / denominator(r);
  return q * denominator(r) == numerator(r) ? q : q + 1;
}

void evaluate(BoundRecord& b, const GammaValue& gamma) {
  const Rational lo(static_cast<long long>(gamma.lo));
  const Rational hi(static_cast<long long>(gamma.hi));
  if (b.side == BoundSide::Lower) {
    b.satisfied = hi >= b.value;
    b.tight = gamma.is_exact() && b.value_exact && lo == b.value;
    b.rounded_tight = gamma.is_exact() && BigInt(gamma.lo) == ceil_of(b.value);
  } else {
    b.satisfied = lo <= b.value;
    b.tight = gamma.is_exact() && b.value_exact && lo == b.value;
    b.rounded_tight = gamma.is_exact() && BigInt(gamma.lo) == floor_of(b.value);
  }
}

}  // namespace

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool BoundsReport::all_satisfied() const {
  return std::all_of(bounds.begin(), bounds.end(),
                     [](const BoundRecord& b) { return !b.applicable || b.satisfied; });
}

const BoundRecord* BoundsReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool log_lower_bound_holds(std::size_t n, std::size_t gamma) {
  if (n <= 4 * gamma) return true;
  const BigInt lhs = BigInt(1) << static_cast<unsigned>(n - 4 * gamma);
  const BigInt rhs = pow(BigInt(n + 2), static_cast<unsigned>(6 * gamma));
  return lhs <= rhs;
}

BoundsReport bounds_report(const Graph& g, GammaValue gamma, std::optional<std::size_t> triple_size) {
  if (gamma.lo > gamma.hi) throw Error(ErrorKind::InvalidArgument, "gamma interval is empty");
  const auto metrics = graph_metrics(g);
  BoundsReport r;
  r.n = g.order();
  r.m = g.size();
  r.connected = r.n > 0 && metrics.connected;
  r.subcubic = g.is_subcubic();
  r.tree = r.n > 0 && is_tree(g);
  r.diameter = r.connected ? metrics.diameter : std::nullopt;
  r.gamma = gamma;
  r.triple_size = triple_size;
  const auto n = r.n;

  auto add = [&](std::string name, BoundSide side, Rational value, bool applicable) {
    BoundRecord b;
    b.name = std::move(name);
    b.side = side;
    b.value = std::move(value);
    b.approx = b.value.convert_to<double>();
    b.applicable = applicable;
    if (applicable) evaluate(b, gamma);
    r.bounds.push_back(std::move(b));
    return &r.bounds.back();
  };

  add("diameter-lower", BoundSide::Lower, r.diameter ? frac(*r.diameter + 2, 4) : Rational(0),
      r.connected);
  add("linear-upper", BoundSide::Upper, frac(2 * (n + 2), 5), r.connected);
  add("subcubic-upper", BoundSide::Upper, frac(n + 2, 3), r.connected && r.subcubic);
  add("tree-lower", BoundSide::Lower, frac(n + 2, 6), r.tree && r.subcubic);

  {
    // 2^k <= n+2 < 2^(k+1) brackets the bound in (n/(6k+10), n/(6k+4)].
    std::size_t k = 0;
    while ((std::size_t{2} << k) <= n + 2) ++k;
    const bool power_of_two = (std::size_t{1} << k) == n + 2;
    BoundRecord b;
    b.name = "log-lower";
    b.side = BoundSide::Lower;
    b.value_exact = power_of_two;
    b.value = power_of_two ? frac(n, 6 * k + 4) : frac(n, 6 * (k + 1) + 4);
    b.approx = static_cast<double>(n) / (6.0 * std::log2(static_cast<double>(n + 2)) + 4.0);
    b.applicable = r.subcubic && n > 0;
    if (b.applicable) {
      b.satisfied = log_lower_bound_holds(n, gamma.hi);
      b.tight = gamma.is_exact() && power_of_two && Rational(static_cast<long long>(gamma.lo)) == b.value;
      b.rounded_tight = gamma.is_exact() && (gamma.lo == 0 || !log_lower_bound_holds(n, gamma.lo - 1));
    }
    r.bounds.push_back(std::move(b));
  }

  {
    BoundRecord b;
    b.name = "triple-lower";
    b.side = BoundSide::Lower;
    b.value = frac(n + 6, 4);
    b.approx = b.value.convert_to<double>();
    b.applicable = triple_size.has_value() && r.subcubic && n >= 3;
    if (b.applicable) evaluate(b, GammaValue::exact(*triple_size));
    r.bounds.push_back(std::move(b));
  }
  return r;
}

ConjectureReport conjecture_experiment(std::size_t n_max, std::size_t threads) {
  if (n_max > 13) throw Error(ErrorKind::Guard, "conjecture experiment supports n_max <= 13");
  ConjectureReport report;
  report.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n % 3 != 1) continue;  // (n+2)/3 is an integer only here
    const auto trees = enumerate_subcubic_trees(n);
    std::vector<char> extremal(trees.size(), 0);
    parallel_for(trees.size(), threads, [&](std::size_t i) {
      extremal[i] = gamma_e_exact(trees[i]).value * 3 == n + 2;
    });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (extremal[i]) report.extremal.push_back(canonical_tree_code(trees[i]));
    }
  }
  for (const auto& t : generate_extremal_candidates(n_max)) {
    report.generated.push_back(canonical_tree_code(t));
  }
  std::sort(report.extremal.begin(), report.extremal.end());
  std::sort(report.generated.begin(), report.generated.end());
  std::set_difference(report.extremal.begin(), report.extremal.end(), report.generated.begin(),
                      report.generated.end(), std::back_inserter(report.extremal_not_generated));
  std::set_difference(report.generated.begin(), report.generated.end(), report.extremal.begin(),
                      report.extremal.end(), std::back_inserter(report.generated_not_extremal));
  return report;
}

}  // namespace expdom
