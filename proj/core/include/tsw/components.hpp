#pragma once

#include <vector>

#include "tsw/configuration.hpp"
#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw {

// One connected component lifted out as a standalone instance. Local vertex
// i is vertices[i]; local token i is the token that starts on vertices[i],
// so the local start configuration is the identity.
struct ComponentProblem {
  Instance instance;
  std::vector<int> vertices;

  SwapSequence to_global(const SwapSequence& local) const;
};

// Splits (inst, start) into independent per-component problems. Components
// that are already solved are omitted. Destination sets are restricted to
// the token's own component; throws InvalidInput if one becomes empty.
std::vector<ComponentProblem> split_components(const Instance& inst,
                                               const Configuration& start);

}  // namespace tsw
