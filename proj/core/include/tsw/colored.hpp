#pragma once

#include <optional>
#include <vector>

#include "tsw/configuration.hpp"
#include "tsw/graph.hpp"
#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

// Plain directed multigraph on nodes 0..nodes-1; loops and parallel arcs
// allowed.
struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Digraph {
  int nodes = 0;
  std::vector<Arc> arcs;
};

// In-degree equals out-degree at every node.
bool is_eulerian(const Digraph& h);

// Component id per arc for the weak components of the arcs' endpoints,
// numbered by smallest arc index.
std::vector<int> arc_components(const Digraph& h);

// A closed trail through every given arc exactly once. Out-arcs are taken
// in ascending index order. The arcs must form one weakly connected
// Eulerian multigraph; throws InvalidInput otherwise.
std::vector<int> eulerian_circuit(const Digraph& h, const std::vector<int>& arc_ids);

struct ColorArc {
  int from = 0;    // color of the vertex
  int to = 0;      // color of the token on it
  int vertex = 0;  // the vertex itself

  friend bool operator==(const ColorArc&, const ColorArc&) = default;
};

struct ColorDigraph {
  std::vector<int> colors;    // distinct colors, ascending
  std::vector<ColorArc> arcs;  // one per vertex, in vertex order

  // The same arcs as a Digraph whose nodes are the color values.
  Digraph as_digraph() const;
};

// Throws InvalidInput when the instance carries no colors.
ColorDigraph build_color_digraph(const Instance& inst);
ColorDigraph build_color_digraph(const Instance& inst, const Configuration& start);

// CTS instance on g whose color digraph is h: vertex i gets color
// arcs[i].from and starts with a token of color arcs[i].to.
Instance realize_color_digraph(const Digraph& h, const Graph& g);

// Shape tests. Star graphs must have their center at vertex 0.
bool is_complete(const Graph& g);
bool is_star(const Graph& g);
// Vertices in path order starting from the lower-numbered endpoint, or
// nullopt if g is not a path.
std::optional<std::vector<int>> path_order(const Graph& g);

long long count_inversions(std::span<const int> values);
// Cycles of the permutation sending each token's position to its target.
int count_cycles(std::span<const int> perm);

// Optimal solvers for the polynomial special cases. Each throws
// InvalidInput when the graph shape or the variant does not fit.
SwapSequence solve_clique_ts(const Instance& inst, const Configuration& start);
SwapSequence solve_star_ts(const Instance& inst, const Configuration& start);
SwapSequence solve_path_ts(const Instance& inst, const Configuration& start);
SwapSequence solve_star_cts(const Instance& inst, const Configuration& start);
SwapSequence solve_path_cts(const Instance& inst, const Configuration& start);

// Picks a solver from the graph shape and variant; throws InvalidInput if
// none applies.
SwapSequence solve_special(const Instance& inst, const Configuration& start);

// Bipartite layout of a path STS instance: tokens (listed in path order of
// their start vertices) against vertices (in path order). Edge (i, j)
// means the i-th token accepts the j-th vertex. A perfect matching's
// crossing count is the inversion count of token index -> vertex index.
struct CrossingLayout {
  std::vector<int> vertex_column;
  std::vector<int> token_column;
  std::vector<std::pair<int, int>> edges;
};

CrossingLayout to_crossing_matching(const Instance& inst, const Configuration& start);

// Perfect matching as match[i] = vertex index for token index i.
long long matching_crossings(std::span<const int> match);

// Minimum crossing count over all perfect matchings, brute force with
// pruning; nullopt if no perfect matching exists. Throws ResourceLimit
// above 10 tokens.
std::optional<long long> min_crossings_brute_force(const CrossingLayout& layout);

}  // namespace tsw
