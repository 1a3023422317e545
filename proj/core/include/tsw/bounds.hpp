#pragma once

#include "tsw/configuration.hpp"
#include "tsw/graph.hpp"
#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

// ceil(L_min / 2), L_min = sum over tokens of the distance to the nearest
// destination. Throws InvalidInput when the instance is infeasible.
long long lower_bound(const Instance& inst, const Configuration& start);

// True iff every swap of s decreases both tokens' distances. Combined with
// optimality this certifies optimum == L/2. Throws InvalidInput when s is
// not a valid solution.
bool is_happy_only_optimal(const Instance& inst, const Configuration& start,
                           const SwapSequence& s);

// r * n for a graph the caller knows to be P_{r+1}-free. Throws on r < 1.
long long upper_bound_pr_free(const Instance& inst, int r);

// Vertex count of a longest induced path, by exhaustive search. Throws
// ResourceLimit above 12 vertices.
int longest_induced_path(const Graph& g);

}  // namespace tsw
