#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "tsw/bounds.hpp"
#include "tsw/error.hpp"
#include "tsw/exact.hpp"
#include "tsw/generators.hpp"

using namespace tsw;
using namespace tsw::gen;

namespace {

Graph k33() {
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  return Graph(6, e);
}

MsiInstance k33_yes() { return {k33(), k33(), {0, 1, 2, 3, 4, 5}}; }

X3cInstance all_identical() { return {3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}; }

void expect_certificate(const GeneratedInstance& g) {
  ASSERT_TRUE(g.certificate);
  auto r = verify_solution(g.instance, g.start, *g.certificate);
  EXPECT_TRUE(r.valid) << r.reason;
  EXPECT_EQ(static_cast<long long>(g.certificate->size()), g.budget);
  EXPECT_LE(lower_bound(g.instance, g.start), g.budget);
  EXPECT_EQ(g.roles.size(), static_cast<std::size_t>(g.instance.size()));
}

std::size_t segment_size(const Provenance& p, const std::string& label) {
  for (const auto& s : p.segments)
    if (s.label == label) return s.swaps.size();
  ADD_FAILURE() << "no segment " << label;
  return 0;
}

// Searches for a solution made of happy swaps only. nullopt when the
// explored state count passes `cap`.
std::optional<bool> happy_only_solution(const Instance& inst, std::size_t cap) {
  DestinationDistances d(inst);
  std::set<std::vector<int>> seen;
  std::vector<int> p(inst.size());
  for (int v = 0; v < inst.size(); ++v) p[v] = v;
  bool capped = false;
  std::function<bool(long long)> dfs = [&](long long left) {
    if (left == 0) return true;
    if (!seen.insert(p).second) return false;
    if (seen.size() > cap) {
      capped = true;
      return false;
    }
    for (const Edge& e : inst.graph().edges()) {
      const int a = p[e.u];
      const int b = p[e.v];
      if (d.to(a, e.v) >= d.to(a, e.u) || d.to(b, e.u) >= d.to(b, e.v)) continue;
      std::swap(p[e.u], p[e.v]);
      const bool found = dfs(left - 2);
      std::swap(p[e.u], p[e.v]);
      if (found) return true;
      if (capped) return false;
    }
    return false;
  };
  const bool r = dfs(d.total(Configuration::identity(inst.size())));
  if (capped) return std::nullopt;
  return r;
}

}  // namespace

TEST(Linker, SizesAndDistances) {
  auto l31 = gen_linker(3, 1);
  EXPECT_EQ(l31.instance.size(), 9);
  for (int t = 1; t <= 3; ++t) {
    auto g = gen_linker(3, t);
    EXPECT_EQ(g.instance.size(), 3 * (t + 2));
    const LinkerLayout L{3, t, 0};
    DistanceMatrix d = all_pairs_distances(g.instance.graph());
    for (int p = 0; p < 3; ++p) EXPECT_EQ(d.at(L.finishing(p), L.starting(p)), 4);
    expect_certificate(g);
    EXPECT_EQ(g.budget, 15);
  }
  EXPECT_THROW(gen_linker(0, 1), InvalidInput);
  EXPECT_THROW(gen_linker(2, 0), InvalidInput);
}

TEST(Linker, SmallCopyIsOptimalAtBudget) {
  auto g = gen_linker(1, 1);
  EXPECT_EQ(static_cast<long long>(solve_bfs(g.instance, g.start)->size()), g.budget);
}

TEST(W1, K33YesInstance) {
  auto g = gen_w1_instance(k33_yes(), MsiSolution{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(g.instance.size(), 54);
  EXPECT_EQ(g.budget, 99);
  EXPECT_EQ(lower_bound(g.instance, g.start), 81);
  expect_certificate(g);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(segment_size(g.provenance, "gadget " + std::to_string(i) + " routing"), 12u);
  EXPECT_EQ(segment_size(g.provenance, "cross swaps"), 9u);
  EXPECT_EQ(segment_size(g.provenance, "placement swaps"), 18u);
  EXPECT_FALSE(is_happy_only_optimal(g.instance, g.start, *g.certificate));
  EXPECT_EQ(g.provenance.param("ignored_host_edges"), 0);
  EXPECT_EQ(g.provenance.param("t"), 1);
}

TEST(W1, HostEdgesBecomeCrossEdges) {
  auto g = gen_w1_instance(k33_yes());
  EXPECT_FALSE(g.certificate);
  // Six linker copies plus one cross edge per host edge.
  const auto linker = linker_edges({3, 1, 0}).size();
  EXPECT_EQ(g.instance.graph().edge_count(), 6 * linker + 9);
}

TEST(W1, PaddingAndNoInstanceChecks) {
  // Two host vertices in class 0, the second one missing an edge to class 3.
  MsiInstance m = k33_yes();
  std::vector<Edge> edges(m.host.edges().begin(), m.host.edges().end());
  edges.emplace_back(6, 4);
  edges.emplace_back(6, 5);
  edges.emplace_back(6, 1);  // same side of the pattern: ignored
  m.host = Graph(7, edges);
  m.host_class.push_back(0);
  auto g = gen_w1_instance(m, MsiSolution{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(g.instance.size(), 3 * (2 + 2) * 6);
  EXPECT_EQ(g.provenance.param("t"), 2);
  EXPECT_EQ(g.provenance.param("ignored_host_edges"), 1);
  expect_certificate(g);
  EXPECT_THROW(gen_w1_instance(m, MsiSolution{6, 1, 2, 3, 4, 5}), InvalidInput);
  EXPECT_THROW(gen_w1_instance(m, MsiSolution{1, 0, 2, 3, 4, 5}), InvalidInput);

  MsiInstance bad = k33_yes();
  bad.pattern = Graph::path(6);
  EXPECT_THROW(gen_w1_instance(bad), InvalidInput);
  MsiInstance missing = k33_yes();
  std::vector<Edge> fewer(missing.host.edges().begin() + 1, missing.host.edges().end());
  missing.host = Graph(6, fewer);
  EXPECT_THROW(gen_w1_instance(missing), InvalidInput);
}

TEST(W1, NoHappyOnlySolutionAtLowerBound) {
  auto g = gen_w1_instance(k33_yes());
  auto r = happy_only_solution(g.instance, 200000);
  if (!r) GTEST_SKIP() << "happy-only search exceeded its state cap";
  EXPECT_FALSE(*r);
}

TEST(W1, NoInstanceHasNoHappyOnlySolution) {
  // Classes of size two. Every pattern edge has a host edge, but the only
  // class-2 vertex reaching class 5 misses classes 3 and 4.
  std::vector<Edge> e{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {8, 5}};
  MsiInstance m{k33(), Graph(12, e), {0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5}};
  auto g = gen_w1_instance(m);
  EXPECT_EQ(g.instance.size(), 72);
  EXPECT_EQ(lower_bound(g.instance, g.start), 81);
  EXPECT_THROW(gen_w1_instance(m, MsiSolution{0, 1, 2, 3, 4, 5}), InvalidInput);
  auto r = happy_only_solution(g.instance, 200000);
  if (!r) GTEST_SKIP() << "happy-only search exceeded its state cap";
  EXPECT_FALSE(*r);
}

TEST(AlmostTree, ThreeIdenticalSets) {
  auto g = gen_almost_tree(all_identical(), X3cCover{0});
  EXPECT_EQ(g.instance.size(), 31);
  EXPECT_EQ(g.budget, 35);
  expect_certificate(g);
  EXPECT_EQ(segment_size(g.provenance, "set 0 rotation via apex"), 11u);
  EXPECT_EQ(segment_size(g.provenance, "set 1 internal rotation"), 9u);
  EXPECT_EQ(segment_size(g.provenance, "set 2 internal rotation"), 9u);
  for (int x = 0; x < 3; ++x)
    EXPECT_EQ(segment_size(g.provenance, "element " + std::to_string(x) + " happy swaps"), 2u);

  const Graph& graph = g.instance.graph();
  const int apex = 30;
  std::vector<int> rest;
  for (int v = 0; v < 31; ++v)
    if (v != apex) rest.push_back(v);
  Graph forest = graph.induced(rest);
  const auto comps = forest.components();
  const int count = *std::max_element(comps.begin(), comps.end()) + 1;
  EXPECT_EQ(forest.edge_count(), static_cast<std::size_t>(30 - count));

  DistanceMatrix d = all_pairs_distances(graph);
  int diameter = 0;
  for (int u = 0; u < 31; ++u) {
    EXPECT_LE(d.at(u, apex), 3);
    for (int v = 0; v < 31; ++v) diameter = std::max(diameter, d.at(u, v));
  }
  EXPECT_LE(diameter, 6);
}

TEST(AlmostTree, Validation) {
  EXPECT_THROW(gen_almost_tree({3, {{0, 1, 2}, {0, 1, 2}}}), InvalidInput);
  EXPECT_THROW(gen_almost_tree({3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 1}}}), InvalidInput);
  EXPECT_THROW(gen_almost_tree({4, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}), InvalidInput);
  EXPECT_THROW(gen_almost_tree(all_identical(), X3cCover{0, 1}), InvalidInput);
  auto plain = gen_almost_tree(all_identical());
  EXPECT_FALSE(plain.certificate);
  EXPECT_EQ(plain.budget, 35);
}

TEST(AlmostTree, LargerCover) {
  // Six elements, each in three sets; sets 0 and 3 form a cover.
  X3cInstance x{6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {3, 4, 5}, {0, 2, 4}, {1, 3, 5}}};
  auto g = gen_almost_tree(x, X3cCover{0, 3});
  EXPECT_EQ(g.instance.size(), 61);
  EXPECT_EQ(g.budget, 70);
  expect_certificate(g);
}

TEST(StarSts, DirectedTriangle) {
  Digraph h{3, {{0, 1}, {1, 2}, {2, 0}}};
  auto g = gen_star_sts(h, std::vector<int>{0, 1, 2});
  EXPECT_EQ(g.instance.size(), 4);
  EXPECT_EQ(g.budget, 4);
  expect_certificate(g);
  EXPECT_EQ(solve_bfs(g.instance, g.start)->size(), 4u);
  for (int t = 0; t < 4; ++t) EXPECT_LE(g.instance.destinations(t).size(), 2u);
}

TEST(StarSts, NonHamiltonianHasNoSolutionAtBudget) {
  Digraph h{4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}}};
  auto g = gen_star_sts(h);
  BfsOptions b;
  b.budget = static_cast<int>(g.budget);
  EXPECT_FALSE(solve_bfs(g.instance, g.start, b));
  EXPECT_THROW(gen_star_sts(h, std::vector<int>{0, 1, 2, 3}), InvalidInput);
}

TEST(StarSts, Validation) {
  EXPECT_THROW(gen_star_sts(Digraph{2, {{0, 0}, {1, 0}}}), InvalidInput);
  EXPECT_THROW(gen_star_sts(Digraph{2, {{0, 1}, {0, 1}, {1, 0}}}), InvalidInput);
  EXPECT_THROW(gen_star_sts(Digraph{2, {{0, 1}}}), InvalidInput);
  EXPECT_THROW(gen_star_sts(Digraph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}}}), InvalidInput);
}

TEST(CliqueCts, Triangles) {
  Digraph one{3, {{0, 1}, {1, 2}, {2, 0}}};
  auto g1 = gen_clique_cts(one, TriangleDecomposition{{0, 1, 2}});
  EXPECT_EQ(g1.budget, 2);
  expect_certificate(g1);
  EXPECT_EQ(solve_bfs(g1.instance, g1.start)->size(), 2u);

  Digraph two{5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}};
  auto g2 = gen_clique_cts(two, TriangleDecomposition{{0, 2, 1}, {3, 4, 5}});
  EXPECT_EQ(g2.instance.size(), 6);
  EXPECT_EQ(g2.budget, 4);
  expect_certificate(g2);
  EXPECT_EQ(solve_bfs(g2.instance, g2.start)->size(), 4u);
  EXPECT_EQ(build_color_digraph(g2.instance).as_digraph().arcs, two.arcs);
}

TEST(CliqueCts, SixCycleNeedsMoreThanBudget) {
  Digraph c6{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
  auto g = gen_clique_cts(c6);
  EXPECT_EQ(g.budget, 4);
  EXPECT_GT(solve_bfs(g.instance, g.start)->size(), 4u);
}

TEST(CliqueCts, Validation) {
  EXPECT_THROW(gen_clique_cts(Digraph{2, {{0, 1}, {1, 0}, {0, 0}}}), InvalidInput);
  EXPECT_THROW(gen_clique_cts(Digraph{3, {{0, 1}, {1, 2}, {0, 2}}}), InvalidInput);
  EXPECT_THROW(gen_clique_cts(Digraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}), InvalidInput);
  Digraph two{5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}};
  EXPECT_THROW(gen_clique_cts(two, TriangleDecomposition{{0, 1, 3}, {2, 4, 5}}), InvalidInput);
  EXPECT_THROW(gen_clique_cts(two, TriangleDecomposition{{0, 1, 2}}), InvalidInput);
}

TEST(Formats, RoundTrip) {
  Digraph h{3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}}};
  Digraph hb = parse_digraph(serialize_digraph(h));
  EXPECT_EQ(hb.nodes, 3);
  EXPECT_EQ(hb.arcs, h.arcs);
  EXPECT_EQ(parse_hamcycle(serialize_hamcycle({2, 0, 1})), (std::vector<int>{2, 0, 1}));
  TriangleDecomposition t{{0, 1, 2}, {3, 4, 5}};
  EXPECT_EQ(parse_triangles(serialize_triangles(t)), t);
  X3cInstance x = all_identical();
  X3cInstance xb = parse_x3c(serialize_x3c(x));
  EXPECT_EQ(xb.universe, 3);
  EXPECT_EQ(xb.sets, x.sets);
  EXPECT_EQ(parse_x3c_cover(serialize_x3c_cover({2})), X3cCover{2});
  MsiInstance m = k33_yes();
  MsiInstance mb = parse_msi(serialize_msi(m));
  EXPECT_EQ(mb.pattern, m.pattern);
  EXPECT_EQ(mb.host, m.host);
  EXPECT_EQ(mb.host_class, m.host_class);
  EXPECT_EQ(parse_msi_solution(serialize_msi_solution({0, 1, 2, 3, 4, 5})),
            (MsiSolution{0, 1, 2, 3, 4, 5}));
  EXPECT_THROW(parse_digraph("digraph v1\nnodes 2 arcs 1\na 0 5\n"), InvalidInput);
  EXPECT_THROW(parse_x3c("x3c v1\nuniverse 3 sets 1\n"), InvalidInput);
}

TEST(Generators, Deterministic) {
  auto a = gen_almost_tree(all_identical(), X3cCover{0});
  auto b = gen_almost_tree(all_identical(), X3cCover{0});
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.certificate, b.certificate);
  EXPECT_EQ(a.roles, b.roles);
}
