#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsw/configuration.hpp"
#include "tsw/graph.hpp"
#include "tsw/instance.hpp"

namespace tsw {

struct SwapSequence {
  std::vector<Edge> swaps;

  std::size_t size() const { return swaps.size(); }
  bool empty() const { return swaps.empty(); }
  friend bool operator==(const SwapSequence&, const SwapSequence&) = default;
};

SwapSequence reversed(const SwapSequence& s);
SwapSequence concat(const SwapSequence& a, const SwapSequence& b);

// Throws NotAnEdge if e is not an edge of g.
Configuration apply_swap(const Graph& g, Configuration config, Edge e);
// Left fold of apply_swap; NotAnEdge carries the offending index.
Configuration apply_sequence(const Graph& g, Configuration start, const SwapSequence& s);

// Hop-count distance matrix; unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  int at(int u, int v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return data_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int> data_;
};

DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources);

// to(t, v): minimum hop distance from vertex v to any vertex of D(t).
class DestinationDistances {
 public:
  explicit DestinationDistances(const Instance& inst);

  int to(int token, int vertex) const {
    return data_[static_cast<std::size_t>(token) * n_ + vertex];
  }
  // Sum over tokens of their current distance; kUnreachable if any token
  // cannot reach its destination set.
  long long total(const Configuration& config) const;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

// Per-token change in distance-to-destination caused by one swap, sorted
// so that x <= y. Both values lie in {-1, 0, +1}.
struct SwapClass {
  int x = 0;
  int y = 0;

  bool happy() const { return x == -1 && y == -1; }
  friend bool operator==(const SwapClass&, const SwapClass&) = default;
};

inline constexpr std::array<SwapClass, 6> kSwapClasses = {
    SwapClass{-1, -1}, SwapClass{-1, 0}, SwapClass{-1, 1},
    SwapClass{0, 0},   SwapClass{0, 1},  SwapClass{1, 1}};

std::size_t class_index(SwapClass c);
std::string to_string(SwapClass c);  // e.g. "-1/+1"

// Tally indexed like kSwapClasses.
using ClassCounts = std::array<std::size_t, 6>;
std::string format_class_counts(const ClassCounts& counts);

SwapClass classify_swap(const Configuration& before, Edge e, const DestinationDistances& dist);

ClassCounts classify_sequence(const Instance& inst, const Configuration& start,
                              const SwapSequence& s);

struct VerificationReport {
  bool valid = false;
  std::size_t length = 0;
  ClassCounts class_counts{};
  std::optional<std::size_t> failing_swap;  // first non-edge
  std::optional<int> violating_token;       // first token off its destinations
  std::string reason;
};

VerificationReport verify_solution(const Instance& inst, const Configuration& start,
                                   const SwapSequence& s);

// True when every token sits on one of its destinations.
bool is_solved(const Instance& inst, const Configuration& config);

}  // namespace tsw
