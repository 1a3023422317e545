#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tsw/error.hpp"
#include "tsw/io.hpp"

using namespace tsw;

TEST(Io, ParsesTsExample) {
  const char* text =
      "# a comment\n"
      "tsw v1 ts\n"
      "n 3 m 2\n"
      "e 0 1\n"
      "e 2 1   # trailing comment\n"
      "t 0 2\n"
      "t 1 1\n"
      "t 2 0\n";
  Instance inst = parse_instance(text);
  EXPECT_EQ(inst.variant(), Variant::ts);
  EXPECT_EQ(inst.graph(), Graph::path(3));
  EXPECT_EQ(inst.target_permutation(), (std::vector<int>{2, 1, 0}));
}

TEST(Io, RejectsMalformedText) {
  EXPECT_THROW(parse_instance(""), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v2 ts\nn 1 m 0\nt 0 0\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 xx\nn 1 m 0\nt 0 0\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 ts\nn 2 m 1\ne 0 0\nt 0 0\nt 1 1\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 ts\nn 2 m 0\nt 0 0\nt 0 1\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 ts\nn 2 m 0\nt 0 0\nt 1 0\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 sts\nn 1 m 0\nd 0 2 0\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 ts\nn 1 m 0\nt 0 0\nextra\n"), InvalidInput);
  EXPECT_THROW(parse_instance("tsw v1 cts\nn 2 m 0\nc 0 1 1\nc 1 2 1\n"), InvalidInput);
  try {
    parse_instance("tsw v1 ts\nn 2 m 1\ne 0 5\nt 0 0\nt 1 1\n");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Io, InstanceRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_connected(rng, 2 + trial % 7, 0.3);
    Instance inst = trial % 3 == 0   ? oracle::random_ts(rng, g)
                    : trial % 3 == 1 ? oracle::random_sts(rng, g, 3)
                                     : oracle::random_cts(rng, g, 3);
    const std::string text = serialize_instance(inst);
    Instance back = parse_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(Io, SolutionAndBundleRoundTrip) {
  SwapSequence s{{{1, 0}, {1, 2}}};
  EXPECT_EQ(serialize_solution(s), "sol 2\ns 0 1\ns 1 2\n");
  EXPECT_EQ(parse_solution(serialize_solution(s)), s);
  EXPECT_EQ(parse_solution("sol 0\n"), SwapSequence{});
  EXPECT_THROW(parse_solution("sol 2\ns 0 1\n"), InvalidInput);

  Bundle b{Instance::token_swapping(Graph::path(3), {2, 1, 0}), 3, SwapSequence{{{0, 1}, {1, 2}, {0, 1}}}};
  Bundle back = parse_bundle(serialize_bundle(b));
  EXPECT_EQ(back.instance, b.instance);
  EXPECT_EQ(back.budget, b.budget);
  EXPECT_EQ(back.solution, b.solution);

  Bundle bare = parse_bundle(serialize_instance(b.instance));
  EXPECT_FALSE(bare.budget);
  EXPECT_FALSE(bare.solution);
}

TEST(Io, ReadText) {
  std::istringstream in("from stdin");
  EXPECT_EQ(read_text("-", in), "from stdin");
  EXPECT_THROW(read_text("/nonexistent/definitely/missing", in), IoError);
}
