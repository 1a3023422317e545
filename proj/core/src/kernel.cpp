#include "tsw/kernel.hpp"

#include <cmath>

#include "tsw/error.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

KernelResult kernelize(const Instance& inst, int k) {
  if (k < 0) throw InvalidInput("negative swap budget");
  const Graph& g = inst.graph();
  const int n = inst.size();
  KernelResult out;
  out.mapping.assign(n, -1);

  std::vector<int> misplaced;
  for (int v = 0; v < n; ++v)
    if (!inst.accepts(v, v)) misplaced.push_back(v);
  // Every swap fixes at most two tokens.
  if (misplaced.size() > 2 * static_cast<std::size_t>(k)) return out;

  std::vector<int> dist = bfs_distances(g, misplaced);
  std::vector<int> ball;
  for (int v = 0; v < n; ++v)
    if (dist[v] <= k) ball.push_back(v);

  // Ball components without a misplaced vertex are useless to a minimal
  // solution. The ball is a union of balls around V_m, so in fact every
  // component contains one; the filter is kept for clarity of intent.
  const Graph ball_graph = g.induced(ball);
  const std::vector<int> comp = ball_graph.components();
  std::vector<char> keep(ball.size(), 0);
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (dist[ball[i]] == 0) keep[comp[i]] = 1;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (keep[comp[i]]) out.vertices.push_back(ball[i]);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    out.mapping[out.vertices[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> sets(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (int d : inst.destinations(out.vertices[i]))
      if (out.mapping[d] != -1) sets[i].push_back(out.mapping[d]);
    if (sets[i].empty()) {
      out.mapping.assign(n, -1);
      out.vertices.clear();
      return out;
    }
  }
  out.verdict = KernelVerdict::kernel;
  out.kernel = Instance::subset(g.induced(out.vertices), std::move(sets));
  return out;
}

double kernel_size_bound(int k, int max_degree) {
  const double kd = k;
  return 2 * kd + 2 * kd * kd * std::pow(static_cast<double>(max_degree), kd);
}

}  // namespace tsw
