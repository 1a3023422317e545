#include "tsw/colored.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tsw/error.hpp"

namespace tsw {
namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

void check_start(const Instance& inst, const Configuration& start) {
  if (start.size() != inst.size())
    throw InvalidInput("start configuration size does not match instance");
}

std::vector<int> ts_target(const Instance& inst, const char* who) {
  auto target = inst.target_permutation();
  if (!target) throw InvalidInput(std::string(who) + " needs a plain token swapping instance");
  return *target;
}

const Coloring& colors_of(const Instance& inst, const char* who) {
  if (!inst.coloring()) throw InvalidInput(std::string(who) + " needs a colored instance");
  return *inst.coloring();
}

// Vertex of degree n-1 in a tree on n vertices, preferring 0.
std::optional<int> star_center(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || g.edge_count() != static_cast<std::size_t>(n - 1)) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return v;
  return std::nullopt;
}

void require_star(const Graph& g, const char* who) {
  auto c = star_center(g);
  if (!c) throw InvalidInput(std::string(who) + ": graph is not a star");
  if (*c != 0) throw InvalidInput(std::string(who) + ": star center must be vertex 0");
}

std::vector<int> require_path(const Graph& g, const char* who) {
  auto order = path_order(g);
  if (!order) throw InvalidInput(std::string(who) + ": graph is not a path");
  return *order;
}

// Adjacent-transposition sort along `order` by keys[i] (the target index
// of the token currently at order[i]).
SwapSequence bubble_sort(const std::vector<int>& order, std::vector<int> keys) {
  SwapSequence s;
  const int n = static_cast<int>(keys.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (keys[i] > keys[i + 1]) {
        std::swap(keys[i], keys[i + 1]);
        s.swaps.emplace_back(order[i], order[i + 1]);
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace

bool is_eulerian(const Digraph& h) {
  std::vector<int> balance(h.nodes, 0);
  for (const Arc& a : h.arcs) {
    if (a.from < 0 || a.from >= h.nodes || a.to < 0 || a.to >= h.nodes)
      throw InvalidInput("arc endpoint out of range");
    ++balance[a.from];
    --balance[a.to];
  }
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

std::vector<int> arc_components(const Digraph& h) {
  UnionFind uf(h.nodes);
  for (const Arc& a : h.arcs) uf.unite(a.from, a.to);
  std::vector<int> node_id(h.nodes, -1);
  std::vector<int> out;
  int next = 0;
  for (const Arc& a : h.arcs) {
    int& id = node_id[uf.find(a.from)];
    if (id == -1) id = next++;
    out.push_back(id);
  }
  return out;
}

std::vector<int> eulerian_circuit(const Digraph& h, const std::vector<int>& arc_ids) {
  if (arc_ids.empty()) return {};
  std::vector<int> ids = arc_ids;
  std::sort(ids.begin(), ids.end());
  std::map<int, std::vector<int>> out_arcs;
  std::map<int, int> balance;
  for (int id : ids) {
    out_arcs[h.arcs[id].from].push_back(id);
    ++balance[h.arcs[id].from];
    --balance[h.arcs[id].to];
  }
  for (const auto& [node, b] : balance)
    if (b != 0) throw InvalidInput("arcs do not form an Eulerian multigraph");

  std::map<int, std::size_t> next;
  std::vector<std::pair<int, int>> stack{{h.arcs[ids[0]].from, -1}};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& list = out_arcs[v];
    std::size_t& i = next[v];
    if (i < list.size()) {
      const int id = list[i++];
      stack.emplace_back(h.arcs[id].to, id);
    } else {
      if (stack.back().second != -1) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  if (circuit.size() != ids.size()) throw InvalidInput("arcs are not weakly connected");
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

Digraph ColorDigraph::as_digraph() const {
  Digraph h;
  h.nodes = colors.empty() ? 0 : colors.back() + 1;
  for (const ColorArc& a : arcs) h.arcs.push_back({a.from, a.to});
  return h;
}

ColorDigraph build_color_digraph(const Instance& inst) {
  return build_color_digraph(inst, Configuration::identity(inst.size()));
}

ColorDigraph build_color_digraph(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  const Coloring& c = colors_of(inst, "color digraph");
  ColorDigraph out;
  out.colors = c.vertex_colors;
  std::sort(out.colors.begin(), out.colors.end());
  out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
  std::map<int, int> balance;
  for (int v = 0; v < inst.size(); ++v) {
    const ColorArc arc{c.vertex_colors[v], c.token_colors[start.token_at(v)], v};
    ++balance[arc.from];
    --balance[arc.to];
    out.arcs.push_back(arc);
  }
  // Guaranteed by the color multiset check in Instance::colored.
  for (const auto& [color, b] : balance)
    if (b != 0) throw InvalidInput("color digraph is not Eulerian");
  return out;
}

Instance realize_color_digraph(const Digraph& h, const Graph& g) {
  if (!is_eulerian(h)) throw InvalidInput("digraph is not Eulerian");
  if (static_cast<int>(h.arcs.size()) != g.vertex_count())
    throw InvalidInput("digraph has " + std::to_string(h.arcs.size()) + " arcs but graph has " +
                       std::to_string(g.vertex_count()) + " vertices");
  std::vector<int> vcolors;
  std::vector<int> tcolors;
  for (const Arc& a : h.arcs) {
    vcolors.push_back(a.from);
    tcolors.push_back(a.to);
  }
  return Instance::colored(g, std::move(vcolors), std::move(tcolors));
}

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return static_cast<long long>(g.edge_count()) == n * (n - 1) / 2;
}

bool is_star(const Graph& g) {
  auto c = star_center(g);
  return c && *c == 0;
}

std::optional<std::vector<int>> path_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::vector<int>{};
  if (g.edge_count() != static_cast<std::size_t>(n - 1)) return std::nullopt;
  int first = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (first == -1 && g.degree(v) <= 1) first = v;
  }
  if (first == -1) return std::nullopt;
  std::vector<int> order{first};
  int prev = -1;
  for (int cur = first; static_cast<int>(order.size()) < n;) {
    int step = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) step = w;
    if (step == -1) return std::nullopt;  // disconnected
    prev = cur;
    cur = step;
    order.push_back(cur);
  }
  return order;
}

long long count_inversions(std::span<const int> values) {
  long long count = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) count += values[i] > values[j] ? 1 : 0;
  return count;
}

int count_cycles(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

SwapSequence solve_clique_ts(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  if (!is_complete(inst.graph())) throw InvalidInput("clique solver: graph is not complete");
  const std::vector<int> target = ts_target(inst, "clique solver");
  std::vector<int> p(start.placement().begin(), start.placement().end());
  SwapSequence s;
  // Each swap sends the token on v straight home, so a cycle of length L
  // costs L-1 swaps.
  for (int v = 0; v < inst.size(); ++v) {
    while (target[p[v]] != v) {
      const int w = target[p[v]];
      s.swaps.emplace_back(v, w);
      std::swap(p[v], p[w]);
    }
  }
  return s;
}

SwapSequence solve_star_ts(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  require_star(inst.graph(), "star solver");
  const std::vector<int> target = ts_target(inst, "star solver");
  std::vector<int> p(start.placement().begin(), start.placement().end());
  SwapSequence s;
  const int n = inst.size();
  int scan = 1;
  while (true) {
    int leaf;
    if (target[p[0]] != 0) {
      leaf = target[p[0]];
    } else {
      while (scan < n && target[p[scan]] == scan) ++scan;
      if (scan == n) break;
      leaf = scan;
    }
    s.swaps.emplace_back(0, leaf);
    std::swap(p[0], p[leaf]);
  }
  return s;
}

SwapSequence solve_path_ts(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  const std::vector<int> order = require_path(inst.graph(), "path solver");
  const std::vector<int> target = ts_target(inst, "path solver");
  std::vector<int> index(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<int> keys;
  for (int v : order) keys.push_back(index[target[start.token_at(v)]]);
  return bubble_sort(order, std::move(keys));
}

SwapSequence solve_path_cts(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  const std::vector<int> order = require_path(inst.graph(), "path solver");
  const Coloring& c = colors_of(inst, "path solver");
  // Leftmost token of a color takes the leftmost vertex of that color.
  std::map<int, std::vector<int>> slots;
  for (std::size_t i = 0; i < order.size(); ++i)
    slots[c.vertex_colors[order[i]]].push_back(static_cast<int>(i));
  std::map<int, std::size_t> used;
  std::vector<int> keys;
  for (int v : order) {
    const int color = c.token_colors[start.token_at(v)];
    keys.push_back(slots[color][used[color]++]);
  }
  return bubble_sort(order, std::move(keys));
}

SwapSequence solve_star_cts(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  require_star(inst.graph(), "star solver");
  const Coloring& c = colors_of(inst, "star solver");
  const int n = inst.size();

  // Leaves already holding their own color never move in an optimal
  // solution, so they are left out of the digraph.
  Digraph h;
  std::vector<int> vertex_of;
  std::map<int, int> node_of;
  auto node = [&](int color) {
    auto [it, fresh] = node_of.try_emplace(color, h.nodes);
    if (fresh) ++h.nodes;
    return it->second;
  };
  for (int v = 0; v < n; ++v) {
    const int from = c.vertex_colors[v];
    const int to = c.token_colors[start.token_at(v)];
    if (v != 0 && from == to) continue;
    h.arcs.push_back({node(from), node(to)});
    vertex_of.push_back(v);
  }

  const std::vector<int> comp = arc_components(h);
  int count = 0;
  for (int id : comp) count = std::max(count, id + 1);
  std::vector<std::vector<int>> members(count);
  for (std::size_t i = 0; i < comp.size(); ++i) members[comp[i]].push_back(static_cast<int>(i));

  // Arc 0 is the center's, so component 0 is C0 and the rest are already
  // ordered by smallest vertex.
  SwapSequence s;
  for (int ci = 0; ci < count; ++ci) {
    std::vector<int> circuit = eulerian_circuit(h, members[ci]);
    if (ci == 0) {
      auto at = std::find(circuit.begin(), circuit.end(), 0);
      std::rotate(circuit.begin(), at, circuit.end());
      for (std::size_t j = 1; j < circuit.size(); ++j)
        s.swaps.emplace_back(0, vertex_of[circuit[j]]);
    } else {
      // The center holds a C0-colored token: walking the circuit drops
      // every token but the first home, and one more swap closes it.
      for (int id : circuit) s.swaps.emplace_back(0, vertex_of[id]);
      s.swaps.emplace_back(0, vertex_of[circuit[0]]);
    }
  }
  return s;
}

SwapSequence solve_special(const Instance& inst, const Configuration& start) {
  const Graph& g = inst.graph();
  const bool path = path_order(g).has_value();
  const bool star = star_center(g).has_value();
  switch (inst.variant()) {
    case Variant::ts:
      if (path) return solve_path_ts(inst, start);
      if (is_complete(g)) return solve_clique_ts(inst, start);
      if (star) return solve_star_ts(inst, start);
      break;
    case Variant::cts:
      if (path) return solve_path_cts(inst, start);
      if (star) return solve_star_cts(inst, start);
      break;
    case Variant::sts:
      break;
  }
  throw InvalidInput("no special-case algorithm for a " + std::string(to_string(inst.variant())) +
                     " instance on this graph (supported: ts on paths, stars and cliques; cts on "
                     "paths and stars)");
}

CrossingLayout to_crossing_matching(const Instance& inst, const Configuration& start) {
  check_start(inst, start);
  CrossingLayout out;
  out.vertex_column = require_path(inst.graph(), "crossing matching");
  for (int v : out.vertex_column) out.token_column.push_back(start.token_at(v));
  const int n = inst.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (inst.accepts(out.token_column[i], out.vertex_column[j])) out.edges.emplace_back(i, j);
  return out;
}

long long matching_crossings(std::span<const int> match) { return count_inversions(match); }

namespace {

void best_matching(const std::vector<std::vector<int>>& options, int i, std::vector<int>& match,
                   std::vector<char>& used, long long cost, std::optional<long long>& best) {
  const int n = static_cast<int>(options.size());
  if (best && cost >= *best) return;
  if (i == n) {
    best = cost;
    return;
  }
  for (int j : options[i]) {
    if (used[j]) continue;
    long long added = 0;
    for (int a = 0; a < i; ++a) added += match[a] > j ? 1 : 0;
    used[j] = 1;
    match[i] = j;
    best_matching(options, i + 1, match, used, cost + added, best);
    used[j] = 0;
  }
}

}  // namespace

std::optional<long long> min_crossings_brute_force(const CrossingLayout& layout) {
  const int n = static_cast<int>(layout.token_column.size());
  if (n > 10) throw ResourceLimit("crossing brute force capped at 10 tokens");
  std::vector<std::vector<int>> options(n);
  for (auto [i, j] : layout.edges) options[i].push_back(j);
  for (auto& o : options) std::sort(o.begin(), o.end());
  std::vector<int> match(n, -1);
  std::vector<char> used(n, 0);
  std::optional<long long> best;
  best_matching(options, 0, match, used, 0, best);
  return best;
}

}  // namespace tsw
