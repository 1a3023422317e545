#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tsw/error.hpp"
#include "tsw/swaps.hpp"

using namespace tsw;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(Graph(-1, {}), InvalidInput);
}

TEST(Graph, EdgesAreCanonicalAndSorted) {
  Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_EQ(g.edges()[2], Edge(2, 3));
  EXPECT_EQ(g.edges()[2].u, 2);
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(g.edge_index(2, 0), 1);
  EXPECT_EQ(g.edge_index(1, 3), -1);
}

TEST(Graph, AdjacencyMatchesEdgeSet) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected(rng, 8, 0.3);
    std::size_t total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(v, w));
      total += g.neighbors(v).size();
    }
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Graph, ComponentsAndInduced) {
  Graph g(5, {{0, 3}, {1, 4}});
  EXPECT_EQ(g.components(), (std::vector<int>{0, 1, 2, 0, 1}));
  EXPECT_FALSE(g.connected());
  std::vector<int> keep{4, 1, 2};
  Graph h = g.induced(keep);
  EXPECT_EQ(h.vertex_count(), 3);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(Configuration, MustBePermutation) {
  EXPECT_THROW(Configuration({0, 0}), InvalidInput);
  EXPECT_THROW(Configuration({0, 2}), InvalidInput);
  Configuration c({2, 0, 1});
  EXPECT_EQ(c.positions(), (std::vector<int>{1, 2, 0}));
}

TEST(Instance, VariantAndColors) {
  Graph g = Graph::path(3);
  EXPECT_EQ(Instance::token_swapping(g, {2, 1, 0}).variant(), Variant::ts);
  EXPECT_THROW(Instance::token_swapping(g, {0, 0, 1}), InvalidInput);
  EXPECT_THROW(Instance::subset(g, {{0}, {}, {2}}), InvalidInput);
  EXPECT_THROW(Instance::subset(g, {{0}, {3}, {2}}), InvalidInput);
  EXPECT_EQ(Instance::subset(g, {{0, 1}, {1}, {2}}).variant(), Variant::sts);
  // A permutation written as subsets is still plain token swapping.
  EXPECT_EQ(Instance::subset(g, {{1}, {0}, {2}}).variant(), Variant::ts);

  Instance c = Instance::colored(g, {5, 7, 5}, {7, 5, 5});
  EXPECT_EQ(c.variant(), Variant::cts);
  EXPECT_EQ(std::vector<int>(c.destinations(0).begin(), c.destinations(0).end()),
            std::vector<int>{1});
  EXPECT_EQ(std::vector<int>(c.destinations(1).begin(), c.destinations(1).end()),
            (std::vector<int>{0, 2}));
  EXPECT_THROW(Instance::colored(g, {1, 1, 2}, {1, 2, 2}), InvalidInput);
}

TEST(ApplySwap, Examples) {
  Graph k2 = Graph::path(2);
  EXPECT_EQ(apply_swap(k2, Configuration({1, 0}), {0, 1}), Configuration({0, 1}));
  Graph k3 = Graph::complete(3);
  EXPECT_EQ(apply_swap(k3, Configuration::identity(3), {0, 1}), Configuration({1, 0, 2}));
  Graph p3 = Graph::path(3);
  EXPECT_THROW(apply_swap(p3, Configuration::identity(3), {0, 2}), NotAnEdge);
  try {
    apply_swap(p3, Configuration::identity(3), {2, 0});
  } catch (const NotAnEdge& e) {
    EXPECT_EQ(e.u(), 0);
    EXPECT_EQ(e.v(), 2);
    EXPECT_NE(std::string(e.what()).find("not an edge"), std::string::npos);
  }
}

TEST(ApplySequence, FoldAndOffendingIndex) {
  Graph p3 = Graph::path(3);
  SwapSequence s{{{0, 1}, {1, 2}, {0, 1}}};
  EXPECT_EQ(apply_sequence(p3, Configuration({2, 1, 0}), s), Configuration::identity(3));
  EXPECT_EQ(apply_sequence(p3, Configuration({2, 1, 0}), {}), Configuration({2, 1, 0}));
  SwapSequence bad{{{0, 1}, {1, 2}, {0, 2}}};
  try {
    apply_sequence(p3, Configuration::identity(3), bad);
    FAIL();
  } catch (const NotAnEdge& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(ApplySequence, InverseAndInvolutionProperties) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(rng, 6, 0.3);
    Configuration c(oracle::random_permutation(rng, 6));
    SwapSequence s;
    std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
    for (int i = 0; i < 9; ++i) s.swaps.push_back(g.edges()[pick(rng)]);
    EXPECT_EQ(apply_sequence(g, apply_sequence(g, c, s), reversed(s)), c);
    for (const Edge& e : g.edges()) EXPECT_EQ(apply_swap(g, apply_swap(g, c, e), e), c);
    // Each swap is a transposition.
    const Configuration end = apply_sequence(g, c, s);
    EXPECT_EQ(relative_sign(c, end), s.size() % 2 == 0 ? 1 : -1);
  }
}

TEST(Distances, Examples) {
  DistanceMatrix k3 = all_pairs_distances(Graph::complete(3));
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) EXPECT_EQ(k3.at(u, v), u == v ? 0 : 1);
  EXPECT_EQ(all_pairs_distances(Graph::path(4)).at(0, 3), 3);
  Graph split(3, {{0, 1}});
  EXPECT_EQ(all_pairs_distances(split).at(0, 2), DistanceMatrix::kUnreachable);
}

TEST(ClassifySwap, Examples) {
  Graph k2 = Graph::path(2);
  Instance swap_pair = Instance::token_swapping(k2, {1, 0});
  DestinationDistances d(swap_pair);
  EXPECT_EQ(classify_swap(Configuration::identity(2), {0, 1}, d), (SwapClass{-1, -1}));
  EXPECT_TRUE(classify_swap(Configuration::identity(2), {0, 1}, d).happy());

  Instance placed = Instance::token_swapping(k2, {0, 1});
  EXPECT_EQ(classify_swap(Configuration::identity(2), {0, 1}, DestinationDistances(placed)),
            (SwapClass{1, 1}));

  // a on v0 wants v2, b on v1 is home.
  Instance p = Instance::token_swapping(Graph::path(3), {2, 1, 0});
  EXPECT_EQ(classify_swap(Configuration::identity(3), {0, 1}, DestinationDistances(p)),
            (SwapClass{-1, 1}));
}

TEST(ClassifySwap, DistanceChangesByAtMostOne) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(rng, 7, 0.25);
    Instance inst = oracle::random_sts(rng, g, 3);
    DestinationDistances d(inst);
    Configuration c(oracle::random_permutation(rng, 7));
    for (const Edge& e : g.edges()) {
      SwapClass k = classify_swap(c, e, d);
      EXPECT_LE(k.x, k.y);
      EXPECT_GE(k.x, -1);
      EXPECT_LE(k.y, 1);
    }
  }
}

TEST(Verify, Examples) {
  Instance id = Instance::token_swapping(Graph::path(3), {0, 1, 2});
  auto r = verify_solution(id, Configuration::identity(3), {});
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.length, 0u);

  Instance rev = Instance::token_swapping(Graph::path(3), {2, 1, 0});
  auto ok = verify_solution(rev, Configuration::identity(3), SwapSequence{{{0, 1}, {1, 2}, {0, 1}}});
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.length, 3u);
  std::size_t tally = 0;
  for (auto c : ok.class_counts) tally += c;
  EXPECT_EQ(tally, 3u);

  auto short_run = verify_solution(rev, Configuration::identity(3), SwapSequence{{{0, 1}}});
  EXPECT_FALSE(short_run.valid);
  EXPECT_TRUE(short_run.violating_token.has_value());

  auto non_edge = verify_solution(rev, Configuration::identity(3), SwapSequence{{{0, 2}}});
  EXPECT_FALSE(non_edge.valid);
  EXPECT_EQ(non_edge.failing_swap, std::optional<std::size_t>(0));
}

TEST(Verify, ValidImpliesPositionalCheck) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(rng, 5, 0.3);
    Instance inst = oracle::random_sts(rng, g, 2);
    SwapSequence s;
    std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
    for (int i = 0; i < trial % 6; ++i) s.swaps.push_back(g.edges()[pick(rng)]);
    auto r = verify_solution(inst, Configuration::identity(5), s);
    const Configuration end = apply_sequence(g, Configuration::identity(5), s);
    bool placed = true;
    for (int v = 0; v < 5; ++v) placed = placed && inst.accepts(end.token_at(v), v);
    EXPECT_EQ(r.valid, placed);
  }
}
