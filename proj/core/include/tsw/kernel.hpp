#pragma once

#include <optional>
#include <vector>

#include "tsw/instance.hpp"

namespace tsw {

enum class KernelVerdict { no, kernel };

struct KernelResult {
  KernelVerdict verdict = KernelVerdict::no;
  std::optional<Instance> kernel;
  // mapping[old] = kernel vertex or -1; vertices[new] = old vertex.
  std::vector<int> mapping;
  std::vector<int> vertices;
};

// Reduces (inst, identity start, budget k) to the radius-k ball around the
// misplaced vertices. Verdict is `no` when more than 2k tokens are
// misplaced or a misplaced token has no destination left inside the ball.
// The kernel starts at the identity configuration.
KernelResult kernelize(const Instance& inst, int k);

// 2k + 2k^2 * max_degree^k, as a double since it overflows quickly.
double kernel_size_bound(int k, int max_degree);

}  // namespace tsw
