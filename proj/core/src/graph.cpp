#include "tsw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tsw/error.hpp"

namespace tsw {

NotAnEdge::NotAnEdge(int u, int v, std::size_t index)
    : InvalidInput(index == npos
                       ? "not an edge: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")"
                       : "not an edge: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") at swap " +
                             std::to_string(index)),
      u_(u),
      v_(v),
      index_(index) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n)
      throw InvalidInput("edge endpoint out of range: (" + std::to_string(e.u) +
                         "," + std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InvalidInput("duplicate edge (" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + ")");
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_)
    best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

int Graph::edge_index(int a, int b) const {
  if (!has_edge(a, b)) return -1;
  const Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  std::queue<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adjacency_[v]) {
        if (comp[w] == -1) {
          comp[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw InvalidInput("induced: vertex out of range");
    if (local[v] != -1) throw InvalidInput("induced: repeated vertex");
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (local[e.u] != -1 && local[e.v] != -1)
      edges.emplace_back(local[e.u], local[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace tsw
