#include "tsw/exact.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "state_index.hpp"
#include "tsw/components.hpp"
#include "tsw/error.hpp"
#include "tsw/feasibility.hpp"

namespace tsw {
namespace {

constexpr int kNoEdge = -1;

int lower_bound_of(const Instance& inst, const Configuration& start) {
  DestinationDistances dist(inst);
  long long total = dist.total(start);
  return static_cast<int>((total + 1) / 2);
}

template <class Codec>
std::optional<SwapSequence> bfs_component(const Instance& inst, int budget,
                                          std::size_t max_states, std::size_t& states) {
  using Key = typename Codec::Key;
  const Graph& g = inst.graph();
  const int n = inst.size();
  const auto edges = g.edges();
  Codec codec;
  typename Codec::Index index;
  std::vector<Key> keys;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;

  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto solved = [&](std::span<const int> placement) {
    for (int v = 0; v < n; ++v)
      if (!inst.accepts(placement[v], v)) return false;
    return true;
  };
  auto reconstruct = [&](std::uint32_t node) {
    SwapSequence s;
    while (node != 0) {
      s.swaps.push_back(edges[via[node]]);
      node = parent[node];
    }
    std::reverse(s.swaps.begin(), s.swaps.end());
    return s;
  };

  keys.push_back(codec.encode(p));
  parent.push_back(0);
  via.push_back(0);
  index.find_or_insert(keys[0], 0, keys);
  ++states;
  if (solved(p)) return SwapSequence{};

  std::size_t begin = 0;
  std::size_t end = 1;
  for (int depth = 0; begin < end; ++depth) {
    if (depth >= budget) return std::nullopt;
    for (std::size_t node = begin; node < end; ++node) {
      codec.decode(keys[node], p);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        std::swap(p[edges[e].u], p[edges[e].v]);
        Key key = codec.encode(p);
        const auto fresh = static_cast<std::uint32_t>(keys.size());
        keys.push_back(std::move(key));
        if (index.find_or_insert(keys.back(), fresh, keys) == fresh) {
          if (states >= max_states)
            throw ResourceLimit("state budget exceeded (" + std::to_string(max_states) +
                                " configurations)");
          ++states;
          parent.push_back(static_cast<std::uint32_t>(node));
          via.push_back(static_cast<std::uint32_t>(e));
          if (solved(p)) return reconstruct(fresh);
        } else {
          keys.pop_back();
        }
        std::swap(p[edges[e].u], p[edges[e].v]);
      }
    }
    begin = end;
    end = keys.size();
  }
  return std::nullopt;
}

// Depth-first search below a cost bound, pruning with ceil(L/2) where L is
// the current sum of token distances. Shared by the bounded and IDA solvers.
class DepthSearch {
 public:
  DepthSearch(const Instance& inst, std::size_t max_expansions)
      : dist_(inst),
        edges_(inst.graph().edges()),
        placement_(inst.size()),
        max_expansions_(max_expansions) {
    std::iota(placement_.begin(), placement_.end(), 0);
    total_ = dist_.total(Configuration::identity(inst.size()));
  }

  int heuristic() const { return static_cast<int>((total_ + 1) / 2); }

  // True when a solution of length <= bound was found (path() holds it);
  // otherwise next_bound() is the smallest pruned cost above bound.
  bool run(int bound) {
    next_bound_ = std::numeric_limits<int>::max();
    path_.clear();
    return dfs(0, bound, kNoEdge);
  }

  int next_bound() const { return next_bound_; }
  std::size_t expansions() const { return expansions_; }

  SwapSequence path() const {
    SwapSequence s;
    for (int e : path_) s.swaps.push_back(edges_[e]);
    return s;
  }

 private:
  bool dfs(int depth, int bound, int last) {
    const int f = depth + heuristic();
    if (f > bound) {
      next_bound_ = std::min(next_bound_, f);
      return false;
    }
    if (total_ == 0) return true;
    if (++expansions_ > max_expansions_)
      throw ResourceLimit("node-expansion cap exceeded (" + std::to_string(max_expansions_) + ")");
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      if (e == last) continue;
      const int u = edges_[e].u;
      const int v = edges_[e].v;
      const int a = placement_[u];
      const int b = placement_[v];
      const long long delta =
          dist_.to(a, v) - dist_.to(a, u) + dist_.to(b, u) - dist_.to(b, v);
      std::swap(placement_[u], placement_[v]);
      total_ += delta;
      path_.push_back(e);
      if (dfs(depth + 1, bound, e)) return true;
      path_.pop_back();
      total_ -= delta;
      std::swap(placement_[u], placement_[v]);
    }
    return false;
  }

  DestinationDistances dist_;
  std::span<const Edge> edges_;
  std::vector<int> placement_;
  long long total_ = 0;
  std::vector<int> path_;
  int next_bound_ = 0;
  std::size_t expansions_ = 0;
  std::size_t max_expansions_;
};

// Optimal solution for one component if its length is within `limit`.
std::optional<SwapSequence> deepen(const Instance& inst, int limit,
                                   std::size_t max_expansions, std::size_t& expanded) {
  DepthSearch search(inst, max_expansions);
  std::optional<SwapSequence> found;
  try {
    for (int bound = search.heuristic(); bound <= limit; bound = search.next_bound()) {
      if (search.run(bound)) {
        found = search.path();
        break;
      }
      if (search.next_bound() == std::numeric_limits<int>::max()) break;
    }
  } catch (...) {
    expanded += search.expansions();
    throw;
  }
  expanded += search.expansions();
  return found;
}

bool differs_by_swap(const Graph& g, std::span<const int> a, std::span<const int> b) {
  int first = -1;
  int second = -1;
  for (int v = 0; v < static_cast<int>(a.size()); ++v) {
    if (a[v] == b[v]) continue;
    if (first == -1) {
      first = v;
    } else if (second == -1) {
      second = v;
    } else {
      return false;
    }
  }
  return second != -1 && a[first] == b[second] && a[second] == b[first] &&
         g.has_edge(first, second);
}

bool reach_rec(const Graph& g, std::span<const int> from, std::span<const int> to, int k) {
  if (k == 0) return std::equal(from.begin(), from.end(), to.begin(), to.end());
  if (k == 1) return differs_by_swap(g, from, to);
  std::vector<int> middle(from.size());
  std::iota(middle.begin(), middle.end(), 0);
  const int first_half = (k + 1) / 2;
  const int second_half = k / 2;
  do {
    if (reach_rec(g, from, middle, first_half) && reach_rec(g, middle, to, second_half))
      return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

// Component problems, or nullopt when some token cannot reach any of its
// destinations (so no solution exists at any length).
std::optional<std::vector<ComponentProblem>> try_split(const Instance& inst,
                                                       const Configuration& start) {
  if (start.size() != inst.size())
    throw InvalidInput("start configuration size does not match instance");
  const std::vector<int> comp = inst.graph().components();
  for (int v = 0; v < inst.size(); ++v) {
    bool reachable = false;
    for (int d : inst.destinations(start.token_at(v))) reachable = reachable || comp[d] == comp[v];
    if (!reachable) return std::nullopt;
  }
  return split_components(inst, start);
}

}  // namespace

std::optional<SwapSequence> solve_bfs(const Instance& inst, const Configuration& start,
                                      const BfsOptions& options, SolveStats* stats) {
  if (options.budget && *options.budget < 0) throw InvalidInput("negative budget");
  SolveStats local_stats;
  SolveStats& st = stats ? *stats : local_stats;
  st.states = 0;
  auto split = try_split(inst, start);
  if (!split) return std::nullopt;
  const auto& parts = *split;
  std::vector<int> lbs;
  for (const auto& part : parts) {
    if (!check_feasible(part.instance).feasible) return std::nullopt;
    lbs.push_back(lower_bound_of(part.instance, Configuration::identity(part.instance.size())));
  }
  long long reserved = std::accumulate(lbs.begin(), lbs.end(), 0LL);
  const long long budget =
      options.budget ? *options.budget : std::numeric_limits<int>::max();
  if (reserved > budget) return std::nullopt;

  SwapSequence out;
  long long used = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    reserved -= lbs[i];
    const int allowance = static_cast<int>(
        std::min<long long>(budget - used - reserved, std::numeric_limits<int>::max()));
    const auto& local = parts[i].instance;
    std::optional<SwapSequence> sol =
        local.size() <= 20
            ? bfs_component<detail::LehmerCodec>(local, allowance, options.max_states, st.states)
            : bfs_component<detail::ArrayCodec>(local, allowance, options.max_states, st.states);
    if (!sol) return std::nullopt;
    used += static_cast<long long>(sol->size());
    out = concat(out, parts[i].to_global(*sol));
  }
  return out;
}

std::optional<SwapSequence> solve_bounded(const Instance& inst, const Configuration& start,
                                          int k, SolveStats* stats) {
  if (k < 0) throw InvalidInput("negative swap budget");
  SolveStats local_stats;
  SolveStats& st = stats ? *stats : local_stats;
  st.states = 0;
  auto split = try_split(inst, start);
  if (!split) return std::nullopt;
  const auto& parts = *split;
  std::vector<int> lbs;
  for (const auto& part : parts) {
    if (!check_feasible(part.instance).feasible) return std::nullopt;
    lbs.push_back(lower_bound_of(part.instance, Configuration::identity(part.instance.size())));
  }
  long long reserved = std::accumulate(lbs.begin(), lbs.end(), 0LL);
  if (reserved > k) return std::nullopt;
  SwapSequence out;
  long long used = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    reserved -= lbs[i];
    const int allowance = static_cast<int>(k - used - reserved);
    auto sol = deepen(parts[i].instance, allowance, std::numeric_limits<std::size_t>::max(),
                      st.states);
    if (!sol) return std::nullopt;
    used += static_cast<long long>(sol->size());
    out = concat(out, parts[i].to_global(*sol));
  }
  return out;
}

bool reach(const Graph& g, const Configuration& from, const Configuration& to, int k) {
  if (k < 0) throw InvalidInput("negative swap count");
  if (from.size() != g.vertex_count() || to.size() != g.vertex_count())
    throw InvalidInput("configuration size does not match graph");
  return reach_rec(g, from.placement(), to.placement(), k);
}

bool solve_via_reach(const Instance& inst, const Configuration& start, int k,
                     const ReachOptions& options) {
  if (k < 0) throw InvalidInput("negative swap budget");
  const int n = inst.size();
  if (n > options.max_vertices)
    throw ResourceLimit("reach enumeration capped at " + std::to_string(options.max_vertices) +
                        " vertices");
  if (!try_split(inst, start)) return false;
  const Graph& g = inst.graph();
  if (g.edge_count() == 0) return is_solved(inst, start);

  const std::vector<int> comp = g.components();
  const std::vector<int> pos = start.positions();
  std::vector<int> target(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) {
      Configuration t(target);
      return reach(g, start, t, k) || (k >= 1 && reach(g, start, t, k - 1));
    }
    for (int token = 0; token < n; ++token) {
      if (used[token] || !inst.accepts(token, v) || comp[pos[token]] != comp[v]) continue;
      used[token] = 1;
      target[v] = token;
      if (extend(v + 1)) return true;
      used[token] = 0;
    }
    return false;
  };
  return extend(0);
}

SwapSequence solve_ida(const Instance& inst, const Configuration& start,
                       const IdaOptions& options, SolveStats* stats) {
  SolveStats local_stats;
  SolveStats& st = stats ? *stats : local_stats;
  st.states = 0;
  auto parts = split_components(inst, start);
  for (const auto& part : parts)
    if (!check_feasible(part.instance).feasible) throw InvalidInput("instance is infeasible");
  SwapSequence out;
  for (const auto& part : parts) {
    const std::size_t cap = options.max_expansions - std::min(options.max_expansions, st.states);
    auto sol = deepen(part.instance, std::numeric_limits<int>::max(), cap, st.states);
    if (!sol) throw InvalidInput("instance is infeasible");
    out = concat(out, part.to_global(*sol));
  }
  return out;
}

}  // namespace tsw
