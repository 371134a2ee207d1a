#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rdrd/error.hpp"
#include "rdrd/graph.hpp"
#include "rdrd/reduction.hpp"
#include "test_helpers.hpp"

using namespace rdrd;
using testing_util::to_matrix;

TEST(Family, CycleThreeIsTriangle) {
  const Graph g = build_family({Family::cycle, 3});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
}

TEST(Family, WoundedSpiderTwoOneIsP4) {
  const Graph g = build_family({Family::wounded_spider, 2, 0, 0, 1});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  const auto s = graph_stats(g);
  EXPECT_TRUE(s.connected);
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_EQ(s.min_degree, 1);
}

TEST(Family, CompleteBipartiteTwoThree) {
  const Graph g = build_family({Family::complete_bipartite, 0, 2, 3});
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 4));
}

TEST(Family, ParseSpec) {
  EXPECT_EQ(build_family(parse_family_spec("cycle:5")).size(), 5);
  EXPECT_EQ(build_family(parse_family_spec("complete_bipartite:2,3")).size(), 6);
  EXPECT_EQ(build_family(parse_family_spec("wounded_spider:3,2")).order(), 6);
  EXPECT_THROW(parse_family_spec("banana:3"), Error);
  EXPECT_THROW(build_family({Family::cycle, 2}), Error);
  EXPECT_THROW(build_family({Family::wounded_spider, 2, 0, 0, 2}), Error);
}

TEST(Family, DegreeSequencesMatchClosedForms) {
  for (int n = 3; n <= 12; ++n) {
    const auto c = graph_stats(build_family({Family::cycle, n}));
    EXPECT_EQ(c.max_degree, 2);
    EXPECT_EQ(c.min_degree, 2);
    EXPECT_EQ(c.m, n);
    EXPECT_EQ(c.bipartite, n % 2 == 0);
    const auto k = graph_stats(build_family({Family::complete, n}));
    EXPECT_EQ(k.min_degree, n - 1);
    EXPECT_EQ(k.m, n * (n - 1) / 2);
    const auto s = graph_stats(build_family({Family::star, n}));
    EXPECT_EQ(s.max_degree, n);
    EXPECT_EQ(s.min_degree, 1);
  }
  for (int n = 2; n <= 12; ++n) {
    const auto p = graph_stats(build_family({Family::path, n}));
    EXPECT_EQ(p.m, n - 1);
    EXPECT_EQ(p.min_degree, 1);
    EXPECT_TRUE(p.bipartite);
  }
}

TEST(GraphStats, Examples) {
  const auto c5 = graph_stats(testing_util::cycle(5));
  EXPECT_EQ(c5.max_degree, 2);
  EXPECT_EQ(c5.min_degree, 2);
  EXPECT_TRUE(c5.connected);
  EXPECT_FALSE(c5.bipartite);
  EXPECT_FALSE(c5.two_coloring.has_value());

  const auto p4 = graph_stats(testing_util::path(4));
  EXPECT_TRUE(p4.bipartite);
  ASSERT_TRUE(p4.two_coloring.has_value());
  EXPECT_NE((*p4.two_coloring)[0], (*p4.two_coloring)[1]);

  const std::vector<Edge> es = {{0, 1}, {2, 3}};
  const auto two_k2 = graph_stats(Graph::from_edges(4, es));
  EXPECT_EQ(two_k2.components, 2);
  EXPECT_FALSE(two_k2.connected);
}

TEST(GraphCore, RejectsBadEdges) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  const std::vector<Edge> range = {{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), ValidationError);
  EXPECT_THROW(Graph::from_edges(3, dup), ValidationError);
  EXPECT_THROW(Graph::from_edges(3, range), ValidationError);
}

TEST(Chordal, Examples) {
  const auto k4 = is_chordal(testing_util::complete(4));
  EXPECT_TRUE(k4.chordal);
  EXPECT_TRUE(is_perfect_elimination_order(testing_util::complete(4), k4.elimination_order));

  const Graph c4 = testing_util::cycle(4);
  const auto r = is_chordal(c4);
  EXPECT_FALSE(r.chordal);
  EXPECT_EQ(r.chordless_cycle.size(), 4u);
  EXPECT_TRUE(oracle::is_chordless_cycle(to_matrix(c4), r.chordless_cycle));

  const X3CInstance fig{2, {{0, 2, 4}, {1, 3, 5}}};
  EXPECT_TRUE(is_chordal(build_reduction(fig).graph).chordal);
}

TEST(Chordal, AgreesWithEliminationOracleOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing_util::all_graphs(n)) {
      const auto a = to_matrix(g);
      const auto r = is_chordal(g);
      ASSERT_EQ(r.chordal, oracle::chordal_by_elimination(a));
      if (r.chordal) {
        ASSERT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
      } else {
        ASSERT_TRUE(oracle::is_chordless_cycle(a, r.chordless_cycle));
      }
    }
  }
}

TEST(Chordal, AgreesWithEliminationOracleOnRandomGraphsUpToEight) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + trial % 3;
    const double p = 0.2 + 0.1 * (trial % 6);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    const Graph g = Graph::from_edges(n, es);
    const auto a = to_matrix(g);
    const auto r = is_chordal(g);
    ASSERT_EQ(r.chordal, oracle::chordal_by_elimination(a));
    if (!r.chordal) ASSERT_TRUE(oracle::is_chordless_cycle(a, r.chordless_cycle));
  }
}

TEST(GraphIo, ParseExamples) {
  const Graph p3 = parse_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(p3, testing_util::path(3));
  const Graph k1 = parse_graph("1 0");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.size(), 0);
  EXPECT_THROW(parse_graph("2 1\n0 0"), ParseError);
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  try {
    parse_graph("# comment\n3 2\n0 1\n1 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 7\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(GraphIo, SerializeRoundTripsCanonicalText) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : {testing_util::cycle(n), testing_util::complete(n), testing_util::path(n)}) {
      const std::string text = serialize_graph(g);
      EXPECT_EQ(serialize_graph(parse_graph(text)), text);
      EXPECT_EQ(parse_graph(text), g);
    }
  }
}

TEST(GraphCore, RelabelAndInduce) {
  const Graph p4 = testing_util::path(4);
  const std::vector<Vertex> perm = {3, 2, 1, 0};
  EXPECT_EQ(p4.relabeled(perm), p4);
  const std::vector<Vertex> keep = {0, 1, 2};
  EXPECT_EQ(p4.induced(keep), testing_util::path(3));
}

TEST(GraphCore, RandomConnectedGraphIsConnectedAndSeeded) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_connected_graph(9, 0.3, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g, random_connected_graph(9, 0.3, seed));
  }
}
