#include "tsw/instance.hpp"

#include <algorithm>
#include <string>

#include "tsw/configuration.hpp"
#include "tsw/error.hpp"

namespace tsw {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ts:
      return "ts";
    case Variant::cts:
      return "cts";
    case Variant::sts:
      return "sts";
  }
  return "?";
}

Configuration::Configuration(std::vector<int> placement)
    : placement_(std::move(placement)) {
  std::vector<char> seen(placement_.size(), 0);
  for (int t : placement_) {
    if (t < 0 || t >= size() || seen[t])
      throw InvalidInput("placement is not a permutation");
    seen[t] = 1;
  }
}

Configuration Configuration::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return Configuration(std::move(p));
}

std::vector<int> Configuration::positions() const {
  std::vector<int> pos(placement_.size());
  for (int v = 0; v < size(); ++v) pos[placement_[v]] = v;
  return pos;
}

void Configuration::exchange(int a, int b) { std::swap(placement_[a], placement_[b]); }

int relative_sign(const Configuration& from, const Configuration& to) {
  if (from.size() != to.size())
    throw InvalidInput("configurations of different sizes");
  // The vertex permutation v -> position of from.token_at(v) in `to`.
  const std::vector<int> pos = to.positions();
  const int n = from.size();
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int v = s; !seen[v]; v = pos[from.token_at(v)]) {
      seen[v] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Instance::Instance(Graph graph, std::vector<std::vector<int>> destinations,
                   std::optional<Coloring> coloring)
    : graph_(std::move(graph)),
      destinations_(std::move(destinations)),
      coloring_(std::move(coloring)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(destinations_.size()) != n)
    throw InvalidInput("destination sets: expected " + std::to_string(n) +
                       ", got " + std::to_string(destinations_.size()));
  accept_.assign(static_cast<std::size_t>(n) * n, 0);
  bool singleton_permutation = true;
  std::vector<char> hit(n, 0);
  for (int t = 0; t < n; ++t) {
    auto& set = destinations_[t];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty())
      throw InvalidInput("token " + std::to_string(t) + " has no destination");
    for (int v : set) {
      if (v < 0 || v >= n)
        throw InvalidInput("destination out of range for token " + std::to_string(t));
      accept_[static_cast<std::size_t>(t) * n + v] = 1;
    }
    if (set.size() != 1 || hit[set[0]]) {
      singleton_permutation = false;
    } else {
      hit[set[0]] = 1;
    }
  }
  if (coloring_) {
    variant_ = Variant::cts;
  } else {
    variant_ = singleton_permutation ? Variant::ts : Variant::sts;
  }
}

Instance Instance::token_swapping(Graph graph, std::vector<int> target) {
  const int n = graph.vertex_count();
  if (static_cast<int>(target.size()) != n)
    throw InvalidInput("target permutation has wrong length");
  Configuration check{std::vector<int>(target)};  // validates permutation
  std::vector<std::vector<int>> sets(n);
  for (int t = 0; t < n; ++t) sets[t] = {target[t]};
  return Instance(std::move(graph), std::move(sets), std::nullopt);
}

Instance Instance::subset(Graph graph, std::vector<std::vector<int>> destinations) {
  return Instance(std::move(graph), std::move(destinations), std::nullopt);
}

Instance Instance::colored(Graph graph, std::vector<int> vertex_colors,
                           std::vector<int> token_colors) {
  const int n = graph.vertex_count();
  if (static_cast<int>(vertex_colors.size()) != n ||
      static_cast<int>(token_colors.size()) != n)
    throw InvalidInput("color arrays must have one entry per vertex");
  std::vector<int> a = vertex_colors;
  std::vector<int> b = token_colors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw InvalidInput("token color multiset differs from vertex color multiset");
  std::vector<std::vector<int>> sets(n);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < n; ++v)
      if (vertex_colors[v] == token_colors[t]) sets[t].push_back(v);
  return Instance(std::move(graph), std::move(sets),
                  Coloring{std::move(vertex_colors), std::move(token_colors)});
}

std::optional<std::vector<int>> Instance::target_permutation() const {
  if (variant_ != Variant::ts) return std::nullopt;
  std::vector<int> target(size());
  for (int t = 0; t < size(); ++t) target[t] = destinations_[t][0];
  return target;
}

}  // namespace tsw
