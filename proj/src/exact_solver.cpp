#include "expdom/exact_solver.hpp"

#include <functional>
#include <string>

#include "expdom/error.hpp"

namespace expdom {

namespace {

// Walks the k-subsets of `pool` in colex order, appending them to `chosen`.
// `prune(chosen, limit)` may veto a branch in which the remaining members all
// come from pool[0..limit). Returns true once `test` accepts a set.
class ColexSearch {
 public:
  ColexSearch(const std::vector<Vertex>& pool, std::vector<Vertex>& chosen,
              std::function<bool(const std::vector<Vertex>&)> test,
              std::function<bool(const std::vector<Vertex>&, std::size_t)> prune)
      : pool_(pool), chosen_(chosen), test_(std::move(test)), prune_(std::move(prune)) {}

  bool run(std::size_t k, std::size_t limit) {
    if (k == 0) {
      ++explored;
      return test_(chosen_);
    }
    if (prune_ && prune_(chosen_, limit)) return false;
    for (std::size_t top = k - 1; top < limit; ++top) {
      chosen_.push_back(pool_[top]);
      if (run(k - 1, top)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::uint64_t explored = 0;

 private:
  const std::vector<Vertex>& pool_;
  std::vector<Vertex>& chosen_;
  std::function<bool(const std::vector<Vertex>&)> test_;
  std::function<bool(const std::vector<Vertex>&, std::size_t)> prune_;
};

}  // namespace

SolveResult gamma_e_exact(const Graph& g, const ExactOptions& options) {
  const auto n = g.order();
  if (n > kExactGuard && !options.force) {
    throw Error(ErrorKind::Guard, "exact solver is limited to n <= " +
                                      std::to_string(kExactGuard) + " (use force to override)");
  }
  SolveResult result;
  result.mode = options.mode;
  if (n == 0) {
    result.proven_minimum = true;
    return result;
  }

  DominationChecker checker(g, options.mode);
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  std::vector<Vertex> chosen;
  auto test = [&](const std::vector<Vertex>& set) { return checker.dominates(set); };

  // Supersets of dominating sets dominate only on subcubic graphs in blocked mode.
  std::function<bool(const std::vector<Vertex>&, std::size_t)> prune;
  std::vector<Vertex> completion;
  if (options.mode == WeightMode::Blocked && g.is_subcubic()) {
    prune = [&](const std::vector<Vertex>& fixed, std::size_t limit) {
      completion.assign(fixed.begin(), fixed.end());
      completion.insert(completion.end(), pool.begin(), pool.begin() + limit);
      return !checker.dominates(completion);
    };
  }

  const std::size_t last = options.max_k ? std::min(*options.max_k, n) : n;
  for (std::size_t k = 1; k <= last; ++k) {
    ColexSearch search(pool, chosen, test, prune);
    const bool found = search.run(k, n);
    result.explored += search.explored;
    if (found) {
      result.value = k;
      result.witness = make_vertex_set(chosen);
      result.proven_minimum = true;
      return result;
    }
    chosen.clear();
  }
  throw BudgetExhausted(static_cast<int>(last + 1), static_cast<long long>(result.explored));
}

SolveResult min_triple_weight_set(const Graph& g, bool force) {
  const auto n = g.order();
  if (!g.is_subcubic()) throw Error(ErrorKind::NotSubcubic, "triple-weight search needs max degree <= 3");
  if (n < 3) throw Error(ErrorKind::Precondition, "triple-weight search needs n >= 3");
  if (n > kTripleGuard && !force) {
    throw Error(ErrorKind::Guard, "triple-weight search is limited to n <= " +
                                      std::to_string(kTripleGuard) + " (use force to override)");
  }
  std::vector<Vertex> forced;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) <= 2 ? forced : pool).push_back(v);

  DominationChecker checker(g, WeightMode::Blocked);
  std::vector<Vertex> chosen = forced;
  auto test = [&](const std::vector<Vertex>& set) { return checker.all_outside_at_least(set, 3); };

  SolveResult result;
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    ColexSearch search(pool, chosen, test, {});
    const bool found = search.run(k, pool.size());
    result.explored += search.explored;
    if (found) {
      result.witness = make_vertex_set(chosen);
      result.value = result.witness.size();
      result.proven_minimum = true;
      return result;
    }
    chosen = forced;
  }
  // S = V always qualifies, so the loop above returns.
  throw Error(ErrorKind::Integrity, "triple-weight search found no set");
}

}  // namespace expdom
