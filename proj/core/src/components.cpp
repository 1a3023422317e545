#include "tsw/components.hpp"

#include <algorithm>
#include <string>

#include "tsw/error.hpp"

namespace tsw {

SwapSequence ComponentProblem::to_global(const SwapSequence& local) const {
  SwapSequence out;
  out.swaps.reserve(local.size());
  for (const Edge& e : local.swaps) out.swaps.emplace_back(vertices[e.u], vertices[e.v]);
  return out;
}

std::vector<ComponentProblem> split_components(const Instance& inst,
                                               const Configuration& start) {
  if (start.size() != inst.size())
    throw InvalidInput("start configuration size does not match instance");
  const Graph& g = inst.graph();
  const std::vector<int> comp = g.components();
  int count = 0;
  for (int c : comp) count = std::max(count, c + 1);

  std::vector<std::vector<int>> members(count);
  for (int v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);

  std::vector<int> local(g.vertex_count(), -1);
  std::vector<ComponentProblem> out;
  for (int c = 0; c < count; ++c) {
    const auto& verts = members[c];
    bool solved = true;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      local[verts[i]] = static_cast<int>(i);
      if (!inst.accepts(start.token_at(verts[i]), verts[i])) solved = false;
    }
    std::vector<std::vector<int>> sets(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const int token = start.token_at(verts[i]);
      for (int d : inst.destinations(token))
        if (comp[d] == c) sets[i].push_back(local[d]);
      if (sets[i].empty())
        throw InvalidInput("token " + std::to_string(token) +
                           " has no destination in its connected component");
    }
    if (solved) continue;
    out.push_back({Instance::subset(g.induced(verts), std::move(sets)), verts});
  }
  return out;
}

}  // namespace tsw
