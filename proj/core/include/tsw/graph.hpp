#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace tsw {

// Unordered vertex pair stored with the smaller endpoint first.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are kept sorted in canonical order; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidInput on self-loops, duplicate edges or out-of-range
  // endpoints.
  Graph(int n, std::vector<Edge> edges);

  static Graph path(int n);
  static Graph star(int leaves);  // center is vertex 0
  static Graph complete(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  bool has_edge(int a, int b) const;
  // Index of {a,b} in edges(), or -1.
  int edge_index(int a, int b) const;

  // Component id per vertex, numbered by smallest member in ascending order.
  std::vector<int> components() const;
  bool connected() const;

  // Subgraph induced by `vertices` (any order); vertex i of the result is
  // vertices[i].
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace tsw
