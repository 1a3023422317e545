#include "tsw/feasibility.hpp"

namespace tsw {
namespace {

// Iterative augmenting-path search from `token`; keeps deep instances off
// the call stack.
bool augment(const Instance& inst, int token, std::vector<int>& owner,
             std::vector<int>& assigned, std::vector<int>& stamp, int round) {
  struct Frame {
    int token;
    std::size_t next;
  };
  std::vector<Frame> stack{{token, 0}};
  std::vector<int> via;  // via[i]: destination taken from stack[i]
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto dests = inst.destinations(top.token);
    if (top.next == dests.size()) {
      stack.pop_back();
      if (!via.empty()) via.pop_back();
      continue;
    }
    int v = dests[top.next++];
    if (stamp[v] == round) continue;
    stamp[v] = round;
    via.push_back(v);
    if (owner[v] == -1) {
      for (std::size_t i = 0; i < stack.size(); ++i) {
        owner[via[i]] = stack[i].token;
        assigned[stack[i].token] = via[i];
      }
      return true;
    }
    stack.push_back({owner[v], 0});
  }
  return false;
}

}  // namespace

MatchingResult check_feasible(const Instance& inst) {
  const int n = inst.size();
  std::vector<int> owner(n, -1);
  std::vector<int> assigned(n, -1);
  std::vector<int> stamp(n, -1);
  MatchingResult result;
  for (int t = 0; t < n; ++t) {
    if (augment(inst, t, owner, assigned, stamp, t)) ++result.matched;
  }
  result.feasible = result.matched == n;
  if (result.feasible) result.assignment = std::move(assigned);
  return result;
}

}  // namespace tsw
