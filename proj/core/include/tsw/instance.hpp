#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tsw/graph.hpp"

namespace tsw {

enum class Variant { ts, cts, sts };

std::string_view to_string(Variant v);

struct Coloring {
  std::vector<int> vertex_colors;
  std::vector<int> token_colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// A graph plus a destination set D(t) for every token. TS and CTS are the
// special cases with singleton permutation sets and color-derived sets.
class Instance {
 public:
  Instance() = default;

  // target[t] is the destination vertex of token t; must be a permutation.
  static Instance token_swapping(Graph graph, std::vector<int> target);
  // Each set must be non-empty with entries in [0, n). Duplicates are
  // removed and sets are sorted.
  static Instance subset(Graph graph, std::vector<std::vector<int>> destinations);
  // Token t accepts every vertex whose color equals token_colors[t]. The
  // two color multisets must agree.
  static Instance colored(Graph graph, std::vector<int> vertex_colors,
                          std::vector<int> token_colors);

  const Graph& graph() const { return graph_; }
  int size() const { return graph_.vertex_count(); }
  Variant variant() const { return variant_; }

  std::span<const int> destinations(int token) const { return destinations_[token]; }
  const std::vector<std::vector<int>>& destination_sets() const { return destinations_; }
  bool accepts(int token, int vertex) const {
    return accept_[static_cast<std::size_t>(token) * size() + vertex] != 0;
  }
  const std::optional<Coloring>& coloring() const { return coloring_; }

  // For TS instances, target[t]; otherwise nullopt.
  std::optional<std::vector<int>> target_permutation() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.destinations_ == b.destinations_ &&
           a.coloring_ == b.coloring_;
  }

 private:
  Instance(Graph graph, std::vector<std::vector<int>> destinations,
           std::optional<Coloring> coloring);

  Graph graph_;
  std::vector<std::vector<int>> destinations_;
  std::optional<Coloring> coloring_;
  std::vector<char> accept_;
  Variant variant_ = Variant::ts;
};

}  // namespace tsw
