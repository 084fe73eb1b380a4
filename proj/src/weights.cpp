#include "expdom/weights.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "expdom/error.hpp"

namespace expdom {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// BFS from `source`; when `blocked` is set, vertices flagged in `in_set` other
// than the source are never entered.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source,
                                        const std::vector<char>& in_set, bool blocked) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreached) continue;
      if (blocked && in_set[y]) continue;
      dist[y] = dist[x] + 1;
      queue.push(y);
    }
  }
  return dist;
}

struct Levels {
  std::vector<std::size_t> level;  // kUnreached if not reached
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> by_level;
};

// BFS from u that records S-vertices but never expands them.
Levels shells_from(const Graph& g, const std::vector<char>& in_set, Vertex u) {
  Levels out;
  out.level.assign(g.order(), kUnreached);
  out.parent.assign(g.order(), u);
  std::queue<Vertex> queue;
  out.level[u] = 0;
  queue.push(u);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    if (out.by_level.size() <= out.level[x]) out.by_level.resize(out.level[x] + 1);
    out.by_level[out.level[x]].push_back(x);
    if (in_set[x]) continue;
    for (Vertex y : g.neighbors(x)) {
      if (out.level[y] != kUnreached) continue;
      out.level[y] = out.level[x] + 1;
      out.parent[y] = x;
      queue.push(y);
    }
  }
  return out;
}

}  // namespace

const char* mode_name(WeightMode mode) { return mode == WeightMode::Blocked ? "blocked" : "porous"; }

std::optional<std::size_t> restricted_distance(const Graph& g, const VertexSet& set, Vertex u,
                                               Vertex v) {
  const auto in_set = membership(set, g.order());
  if (u >= g.order() || v >= g.order()) {
    throw Error(ErrorKind::VertexOutOfRange, "restricted_distance: vertex out of range");
  }
  if (!in_set[u] && !in_set[v]) {
    throw Error(ErrorKind::Precondition, "restricted_distance needs an endpoint in S");
  }
  if (u == v) return 0;
  if (in_set[u] && in_set[v]) return std::nullopt;
  const Vertex source = in_set[u] ? u : v;
  const Vertex target = in_set[u] ? v : u;
  const auto dist = distances_from(g, source, in_set, true);
  if (dist[target] == kUnreached) return std::nullopt;
  return dist[target];
}

WeightProfile weight_profile(const Graph& g, const VertexSet& set, WeightMode mode) {
  const auto n = g.order();
  const auto in_set = membership(set, n);
  const bool blocked = mode == WeightMode::Blocked;

  std::vector<std::vector<std::size_t>> runs;
  runs.reserve(set.size());
  std::size_t deepest = 0;
  for (Vertex s : set) {
    runs.push_back(distances_from(g, s, in_set, blocked));
    for (auto d : runs.back()) {
      if (d != kUnreached) deepest = std::max(deepest, d);
    }
  }
  // Contribution 2^(1-d) is accumulated as 2^(deepest+1-d) over a common 2^deepest.
  std::vector<BigInt> acc(n);
  for (const auto& dist : runs) {
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreached) continue;
      acc[v] += BigInt(1) << static_cast<unsigned>(deepest + 1 - dist[v]);
    }
  }
  WeightProfile profile;
  profile.mode = mode;
  profile.set = set;
  profile.weights.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    profile.weights.emplace_back(std::move(acc[v]), static_cast<std::uint32_t>(deepest));
  }
  return profile;
}

DominationReport is_exponential_dominating(const Graph& g, const VertexSet& set, WeightMode mode) {
  const auto profile = weight_profile(g, set, mode);
  DominationReport report;
  const Dyadic one(1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (profile.weights[v] < one) report.deficient.emplace_back(v, profile.weights[v]);
  }
  report.ok = report.deficient.empty();
  return report;
}

Dyadic ShellProfile::weight() const {
  Dyadic total;
  for (std::size_t i = 0; i < set_counts.size(); ++i) {
    if (set_counts[i]) total += Dyadic(static_cast<std::int64_t>(set_counts[i])).scaled(1 - static_cast<std::int64_t>(i));
  }
  return total;
}

ShellProfile shell_profile(const Graph& g, const VertexSet& set, Vertex u) {
  const auto in_set = membership(set, g.order());
  if (u >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "shell center out of range");
  if (in_set[u]) throw Error(ErrorKind::Precondition, "shell center must lie outside S");

  const auto levels = shells_from(g, in_set, u);
  ShellProfile p;
  p.center = u;
  p.truncation = levels.by_level.size();
  for (const auto& members : levels.by_level) {
    p.level_sizes.push_back(members.size());
    p.set_counts.push_back(static_cast<std::size_t>(
        std::count_if(members.begin(), members.end(), [&](Vertex v) { return in_set[v] != 0; })));
  }
  // Degree budget: the center spends deg(u) edges on level 1 (2 when deg(u) <= 2,
  // the classical bound), every later non-S vertex at most two more.
  const BigInt first = g.degree(u) <= 2 ? 2 : static_cast<long long>(g.degree(u));
  p.level_bounds.push_back(1);
  for (std::size_t k = 1; k < p.truncation; ++k) {
    BigInt bound = k == 1 ? first : BigInt(2 * (p.level_bounds[k - 1] - p.set_counts[k - 1]));
    // closed form equivalent: first*2^(k-1) - sum_{1<=i<k} s_i 2^(k-i)
    p.level_bounds.push_back(bound);
  }
  for (std::size_t k = 0; k < p.truncation; ++k) {
    if (BigInt(p.level_sizes[k]) > p.level_bounds[k]) {
      p.bound_holds = false;
      p.first_violation = k;
      break;
    }
  }
  return p;
}

VertexSet FullBinaryCert::vertices() const {
  std::vector<Vertex> out{root};
  for (const auto& [parent, child] : edges) out.push_back(child);
  return make_vertex_set(out);
}

std::optional<FullBinaryCert> lemma1_certificate(const Graph& g, const VertexSet& set, Vertex u) {
  if (!g.is_subcubic()) throw Error(ErrorKind::NotSubcubic, "certificate requires max degree <= 3");
  if (u >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "certificate root out of range");
  if (g.degree(u) > 2) throw Error(ErrorKind::Precondition, "certificate root must have degree <= 2");
  const auto in_set = membership(set, g.order());
  if (in_set[u]) throw Error(ErrorKind::Precondition, "certificate root must lie outside S");

  const auto levels = shells_from(g, in_set, u);
  // Smallest k whose prefix sum of s_i / 2^(i-1) reaches 2.
  Dyadic prefix;
  const Dyadic two(2);
  std::optional<std::size_t> closing;
  for (std::size_t i = 0; i < levels.by_level.size(); ++i) {
    const auto s = std::count_if(levels.by_level[i].begin(), levels.by_level[i].end(),
                                 [&](Vertex v) { return in_set[v] != 0; });
    if (s) prefix += Dyadic(static_cast<std::int64_t>(s)).scaled(1 - static_cast<std::int64_t>(i));
    if (prefix == two) {
      closing = i;
      break;
    }
  }
  if (!closing) return std::nullopt;

  FullBinaryCert cert;
  cert.root = u;
  std::vector<std::size_t> child_count(g.order(), 0);
  std::vector<Vertex> leaves;
  for (std::size_t i = 0; i <= *closing; ++i) {
    for (Vertex v : levels.by_level[i]) {
      if (i > 0) {
        cert.edges.emplace_back(levels.parent[v], v);
        ++child_count[levels.parent[v]];
      }
      if (in_set[v]) leaves.push_back(v);
    }
  }
  cert.leaves = make_vertex_set(leaves);
  for (std::size_t i = 0; i <= *closing; ++i) {
    for (Vertex v : levels.by_level[i]) {
      const bool leaf = in_set[v] != 0;
      if (i == *closing && !leaf) {
        throw Error(ErrorKind::Integrity, "certificate: deepest level contains a non-S vertex");
      }
      if (!leaf && child_count[v] != 2) {
        throw Error(ErrorKind::Integrity, "certificate: internal vertex without two children");
      }
    }
  }
  return cert;
}

DominationChecker::DominationChecker(const Graph& g, WeightMode mode)
    : graph_(g),
      mode_(mode),
      fixed_point_(g.order() <= 100),
      acc_(g.order()),
      in_set_(g.order(), 0),
      dist_(g.order(), 0),
      stamp_(g.order(), 0) {
  queue_.reserve(g.order());
}

void DominationChecker::accumulate(std::span<const Vertex> set) {
  const auto n = graph_.order();
  std::fill(acc_.begin(), acc_.end(), 0);
  const bool blocked = mode_ == WeightMode::Blocked;
  for (Vertex s : set) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    queue_.push_back(s);
    stamp_[s] = epoch_;
    dist_[s] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      // weight 2^(1-d) scaled by 2^n
      acc_[x] += static_cast<unsigned __int128>(1) << (n + 1 - dist_[x]);
      for (Vertex y : graph_.neighbors(x)) {
        if (stamp_[y] == epoch_) continue;
        if (blocked && in_set_[y]) continue;
        stamp_[y] = epoch_;
        dist_[y] = dist_[x] + 1;
        queue_.push_back(y);
      }
    }
  }
}

bool DominationChecker::all_outside_at_least(std::span<const Vertex> set, unsigned threshold) {
  const auto n = graph_.order();
  if (!fixed_point_) {
    const VertexSet sorted = make_vertex_set({set.begin(), set.end()});
    const auto profile = weight_profile(graph_, sorted, mode_);
    const auto in = membership(sorted, n);
    const Dyadic bar(static_cast<std::int64_t>(threshold));
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v] && profile.weights[v] < bar) return false;
    }
    return true;
  }
  for (Vertex s : set) in_set_[s] = 1;
  accumulate(set);
  const unsigned __int128 bar = static_cast<unsigned __int128>(threshold) << n;
  bool ok = true;
  for (Vertex v = 0; v < n && ok; ++v) {
    if (!in_set_[v] && acc_[v] < bar) ok = false;
  }
  for (Vertex s : set) in_set_[s] = 0;
  return ok;
}

bool DominationChecker::dominates(std::span<const Vertex> set) {
  return all_outside_at_least(set, 1);
}

}  // namespace expdom
