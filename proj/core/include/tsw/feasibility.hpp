#pragma once

#include <optional>
#include <vector>

#include "tsw/instance.hpp"

namespace tsw {

struct MatchingResult {
  bool feasible = false;
  // assignment[t] = destination vertex chosen for token t.
  std::optional<std::vector<int>> assignment;
  int matched = 0;
};

// Perfect matching in the token/destination bipartite graph, found by
// augmenting paths with tokens and destinations scanned in ascending order.
MatchingResult check_feasible(const Instance& inst);

}  // namespace tsw
