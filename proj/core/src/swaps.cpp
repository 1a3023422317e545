#include "tsw/swaps.hpp"

#include <algorithm>
#include <queue>

#include "tsw/error.hpp"

namespace tsw {

SwapSequence reversed(const SwapSequence& s) {
  SwapSequence r{s.swaps};
  std::reverse(r.swaps.begin(), r.swaps.end());
  return r;
}

SwapSequence concat(const SwapSequence& a, const SwapSequence& b) {
  SwapSequence r{a.swaps};
  r.swaps.insert(r.swaps.end(), b.swaps.begin(), b.swaps.end());
  return r;
}

Configuration apply_swap(const Graph& g, Configuration config, Edge e) {
  if (config.size() != g.vertex_count())
    throw InvalidInput("configuration size does not match graph");
  if (!g.has_edge(e.u, e.v)) throw NotAnEdge(e.u, e.v);
  config.exchange(e.u, e.v);
  return config;
}

Configuration apply_sequence(const Graph& g, Configuration start, const SwapSequence& s) {
  if (start.size() != g.vertex_count())
    throw InvalidInput("configuration size does not match graph");
  for (std::size_t i = 0; i < s.swaps.size(); ++i) {
    const Edge& e = s.swaps[i];
    if (!g.has_edge(e.u, e.v)) throw NotAnEdge(e.u, e.v, i);
    start.exchange(e.u, e.v);
  }
  return start;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
  std::vector<int> dist(g.vertex_count(), DistanceMatrix::kUnreachable);
  std::queue<int> queue;
  for (int s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix m(n);
  for (int s = 0; s < n; ++s) {
    const int src[] = {s};
    auto row = bfs_distances(g, src);
    for (int v = 0; v < n; ++v) m.at(s, v) = row[v];
  }
  return m;
}

DestinationDistances::DestinationDistances(const Instance& inst) : n_(inst.size()) {
  data_.resize(static_cast<std::size_t>(n_) * n_);
  for (int t = 0; t < n_; ++t) {
    auto row = bfs_distances(inst.graph(), inst.destinations(t));
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(t) * n_);
  }
}

long long DestinationDistances::total(const Configuration& config) const {
  long long sum = 0;
  for (int v = 0; v < n_; ++v) {
    int d = to(config.token_at(v), v);
    if (d == DistanceMatrix::kUnreachable) return DistanceMatrix::kUnreachable;
    sum += d;
  }
  return sum;
}

std::size_t class_index(SwapClass c) {
  for (std::size_t i = 0; i < kSwapClasses.size(); ++i)
    if (kSwapClasses[i] == c) return i;
  throw InvalidInput("not a swap class");
}

namespace {

std::string signed_unit(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

int delta(int before, int after) {
  if (before == DistanceMatrix::kUnreachable || after == DistanceMatrix::kUnreachable)
    return 0;
  return after - before;
}

}  // namespace

std::string to_string(SwapClass c) { return signed_unit(c.x) + "/" + signed_unit(c.y); }

std::string format_class_counts(const ClassCounts& counts) {
  std::string out;
  for (std::size_t i = 0; i < kSwapClasses.size(); ++i) {
    if (i) out += ',';
    out += to_string(kSwapClasses[i]) + ":" + std::to_string(counts[i]);
  }
  return out;
}

SwapClass classify_swap(const Configuration& before, Edge e, const DestinationDistances& dist) {
  const int a = before.token_at(e.u);
  const int b = before.token_at(e.v);
  const int da = delta(dist.to(a, e.u), dist.to(a, e.v));
  const int db = delta(dist.to(b, e.v), dist.to(b, e.u));
  return SwapClass{std::min(da, db), std::max(da, db)};
}

ClassCounts classify_sequence(const Instance& inst, const Configuration& start,
                              const SwapSequence& s) {
  DestinationDistances dist(inst);
  ClassCounts counts{};
  Configuration config = start;
  for (std::size_t i = 0; i < s.swaps.size(); ++i) {
    const Edge& e = s.swaps[i];
    if (!inst.graph().has_edge(e.u, e.v)) throw NotAnEdge(e.u, e.v, i);
    ++counts[class_index(classify_swap(config, e, dist))];
    config.exchange(e.u, e.v);
  }
  return counts;
}

bool is_solved(const Instance& inst, const Configuration& config) {
  for (int v = 0; v < config.size(); ++v)
    if (!inst.accepts(config.token_at(v), v)) return false;
  return true;
}

VerificationReport verify_solution(const Instance& inst, const Configuration& start,
                                   const SwapSequence& s) {
  if (start.size() != inst.size())
    throw InvalidInput("start configuration size does not match instance");
  VerificationReport report;
  report.length = s.size();
  DestinationDistances dist(inst);
  Configuration config = start;
  for (std::size_t i = 0; i < s.swaps.size(); ++i) {
    const Edge& e = s.swaps[i];
    if (!inst.graph().has_edge(e.u, e.v)) {
      report.failing_swap = i;
      report.reason = "swap " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") is not an edge";
      return report;
    }
    ++report.class_counts[class_index(classify_swap(config, e, dist))];
    config.exchange(e.u, e.v);
  }
  const std::vector<int> pos = config.positions();
  for (int t = 0; t < inst.size(); ++t) {
    if (!inst.accepts(t, pos[t])) {
      report.violating_token = t;
      report.reason = "token " + std::to_string(t) + " ends on vertex " +
                      std::to_string(pos[t]) + " outside its destination set";
      return report;
    }
  }
  report.valid = true;
  return report;
}

}  // namespace tsw
