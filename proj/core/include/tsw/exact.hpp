#pragma once

#include <cstddef>
#include <optional>

#include "tsw/configuration.hpp"
#include "tsw/graph.hpp"
#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

struct SolveStats {
  // Configurations stored (BFS) or nodes expanded (depth-first searches),
  // summed over components.
  std::size_t states = 0;
};

struct BfsOptions {
  std::optional<int> budget;
  std::size_t max_states = 50'000'000;
};

// Breadth-first search of the configuration graph, one component at a time,
// stopping at the first configuration where every token is accepted. Edges
// are expanded in canonical order, so within a component the result is the
// lexicographically least shortest sequence. Returns nullopt when the
// instance is infeasible, a token is cut off from all its destinations, or
// the optimum exceeds the budget. Throws ResourceLimit when more than
// max_states configurations would be stored.
std::optional<SwapSequence> solve_bfs(const Instance& inst, const Configuration& start,
                                      const BfsOptions& options = {},
                                      SolveStats* stats = nullptr);

// Some solution with at most k swaps, or nullopt. Depth-bounded search
// pruned by the distance lower bound.
std::optional<SwapSequence> solve_bounded(const Instance& inst, const Configuration& start,
                                          int k, SolveStats* stats = nullptr);

// True iff `to` is reachable from `from` in exactly k swaps. Midpoint
// recursion over all intermediate configurations; space is O(n log k).
bool reach(const Graph& g, const Configuration& from, const Configuration& to, int k);

struct ReachOptions {
  int max_vertices = 9;
};

// True iff some configuration satisfying every destination set is reachable
// within k swaps. Enumerates feasible targets in lexicographic order and
// queries reach() for exactly k and k-1 swaps. Throws ResourceLimit above
// max_vertices.
bool solve_via_reach(const Instance& inst, const Configuration& start, int k,
                     const ReachOptions& options = {});

struct IdaOptions {
  std::size_t max_expansions = 500'000'000;
};

// Iterative deepening with the admissible bound ceil(sum of distances / 2).
// Optimal; memory is linear in the solution length. Throws InvalidInput on
// infeasible instances and ResourceLimit past max_expansions.
SwapSequence solve_ida(const Instance& inst, const Configuration& start,
                       const IdaOptions& options = {}, SolveStats* stats = nullptr);

}  // namespace tsw
