#include "tsw/bounds.hpp"

#include <algorithm>
#include <string>

#include "tsw/error.hpp"
#include "tsw/feasibility.hpp"

namespace tsw {

long long lower_bound(const Instance& inst, const Configuration& start) {
  if (start.size() != inst.size())
    throw InvalidInput("start configuration size does not match instance");
  if (!check_feasible(inst).feasible) throw InvalidInput("instance is infeasible");
  const long long total = DestinationDistances(inst).total(start);
  if (total == DistanceMatrix::kUnreachable)
    throw InvalidInput("some token cannot reach any of its destinations");
  return (total + 1) / 2;
}

bool is_happy_only_optimal(const Instance& inst, const Configuration& start,
                           const SwapSequence& s) {
  const VerificationReport report = verify_solution(inst, start, s);
  if (!report.valid) throw InvalidInput("not a valid solution: " + report.reason);
  const std::size_t happy = report.class_counts[class_index(SwapClass{-1, -1})];
  return happy == report.length;
}

long long upper_bound_pr_free(const Instance& inst, int r) {
  if (r < 1) throw InvalidInput("r must be at least 1");
  return static_cast<long long>(r) * inst.size();
}

namespace {

void extend_path(const Graph& g, std::vector<int>& path, std::vector<int>& blocked, int& best) {
  best = std::max(best, static_cast<int>(path.size()));
  const int last = path.back();
  for (int w : g.neighbors(last)) {
    // w must touch no path vertex other than `last`.
    if (blocked[w]) continue;
    for (int x : g.neighbors(last)) ++blocked[x];
    ++blocked[last];
    path.push_back(w);
    extend_path(g, path, blocked, best);
    path.pop_back();
    --blocked[last];
    for (int x : g.neighbors(last)) --blocked[x];
  }
}

}  // namespace

int longest_induced_path(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw ResourceLimit("longest induced path search capped at 12 vertices");
  int best = 0;
  std::vector<int> blocked(n, 0);
  std::vector<int> path;
  for (int v = 0; v < n; ++v) {
    path.assign(1, v);
    extend_path(g, path, blocked, best);
  }
  return best;
}

}  // namespace tsw
