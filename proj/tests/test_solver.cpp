#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rdrd/error.hpp"
#include "rdrd/products.hpp"
#include "rdrd/solver.hpp"
#include "test_helpers.hpp"

using namespace rdrd;
using testing_util::to_matrix;

namespace {

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 11; ++n) out.push_back(testing_util::path(n));
  for (int n = 3; n <= 11; ++n) out.push_back(testing_util::cycle(n));
  for (int n = 1; n <= 7; ++n) out.push_back(testing_util::complete(n));
  for (int n = 1; n <= 8; ++n) out.push_back(build_family({Family::star, n}));
  out.push_back(build_family({Family::complete_bipartite, 0, 2, 3}));
  out.push_back(build_family({Family::complete_bipartite, 0, 3, 3}));
  out.push_back(build_family({Family::wounded_spider, 4, 0, 0, 3}));
  out.push_back(corona_k1(testing_util::cycle(5)));
  out.push_back(corona_k1(testing_util::path(5)));
  out.push_back(strong_product(testing_util::path(2), testing_util::path(5)).graph);
  out.push_back(cardinal_product(testing_util::path(2), testing_util::path(5)).graph);
  out.push_back(testing_util::empty(3));
  const std::vector<Edge> two_k2 = {{0, 1}, {2, 3}};
  out.push_back(Graph::from_edges(4, two_k2));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    out.push_back(random_connected_graph(5 + static_cast<int>(seed % 7), 0.25, seed));
  }
  return out;
}

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force(testing_util::path(4), Problem::rdrd_min).value, 6);
  EXPECT_EQ(brute_force(testing_util::path(3), Problem::rdrd_min).value, 4);
  EXPECT_EQ(brute_force(testing_util::cycle(6), Problem::twopack_max).value, 2);
  EXPECT_EQ(brute_force(testing_util::complete(4), Problem::rdrd_min).value, 3);
}

TEST(BruteForce, AgreesWithNaiveOraclesUpToSeven) {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : testing_util::all_graphs(n)) {
      const auto a = to_matrix(g);
      ASSERT_EQ(brute_force(g, Problem::rdrd_min).value, oracle::min_weight(a, true));
      ASSERT_EQ(brute_force(g, Problem::drd_min).value, oracle::min_weight(a, false));
      ASSERT_EQ(brute_force(g, Problem::dom_min).value, oracle::domination_number(a));
      ASSERT_EQ(brute_force(g, Problem::twopack_max).value, oracle::two_packing_number(a));
    }
  }
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = random_connected_graph(5 + static_cast<int>(seed % 3), 0.3, seed);
    const auto a = to_matrix(g);
    ASSERT_EQ(brute_force(g, Problem::rdrd_min).value, oracle::min_weight(a, true));
    ASSERT_EQ(brute_force(g, Problem::drd_min).value, oracle::min_weight(a, false));
    ASSERT_EQ(brute_force(g, Problem::dom_min).value, oracle::domination_number(a));
    ASSERT_EQ(brute_force(g, Problem::twopack_max).value, oracle::two_packing_number(a));
  }
}

TEST(BruteForce, EnumerationCountsMatchOracle) {
  for (const Graph& g : {testing_util::cycle(6), testing_util::path(5), testing_util::complete(4),
                         corona_k1(testing_util::path(3))}) {
    BruteForceOptions opts;
    opts.enumerate_all = true;
    const auto r = brute_force(g, Problem::rdrd_min, opts);
    const auto a = to_matrix(g);
    ASSERT_TRUE(r.optimum_count.has_value());
    EXPECT_EQ(*r.optimum_count, oracle::count_min(a, true, r.value));
    EXPECT_EQ(static_cast<std::int64_t>(r.optima.size()), *r.optimum_count);
    EXPECT_TRUE(std::is_sorted(r.optima.begin(), r.optima.end()));
    for (const auto& f : r.optima) {
      EXPECT_EQ(f.weight(), r.value);
      EXPECT_TRUE(is_valid(g, f));
    }
    EXPECT_EQ(r.certificate, r.optima.front());
  }
}

TEST(BruteForce, RefusesLargeInstances) {
  EXPECT_THROW(brute_force(testing_util::cycle(14), Problem::rdrd_min), LimitError);
  EXPECT_THROW(brute_force(testing_util::cycle(23), Problem::dom_min), LimitError);
}

TEST(BranchAndBound, Examples) {
  EXPECT_EQ(solve_rdrd_bnb(cardinal_product(testing_util::cycle(3), testing_util::cycle(4)).graph).value, 8);
  EXPECT_EQ(solve_rdrd_bnb(testing_util::complete(4)).value, 3);
  EXPECT_EQ(solve_rdrd_bnb(corona_k1(testing_util::cycle(5))).value, 13);
}

TEST(BranchAndBound, AgreesWithBruteForceOnCorpus) {
  for (const Graph& g : corpus()) {
    if (g.order() > 11) continue;
    const auto exact = brute_force(g, Problem::rdrd_min, {false, 11, 22});
    const auto bnb = solve_rdrd_bnb(g);
    ASSERT_EQ(bnb.value, exact.value) << serialize_graph(g);
    ASSERT_TRUE(bnb.optimal);
    ASSERT_EQ(bnb.lower_bound, bnb.value);
    ASSERT_TRUE(is_valid(g, bnb.certificate));
    ASSERT_EQ(bnb.certificate.weight(), bnb.value);

    BnbOptions drd;
    drd.variant = Variant::drd;
    const auto bnb_drd = solve_rdrd_bnb(g, drd);
    ASSERT_EQ(bnb_drd.value, brute_force(g, Problem::drd_min, {false, 11, 22}).value);
    ASSERT_TRUE(is_valid(g, bnb_drd.certificate, Variant::drd));
  }
}

TEST(BranchAndBound, ParallelMatchesSequential) {
  for (const Graph& g : corpus()) {
    BnbOptions par;
    par.threads = 4;
    ASSERT_EQ(solve_rdrd_bnb(g, par).value, solve_rdrd_bnb(g).value);
  }
}

TEST(BranchAndBound, EnumerationMatchesBruteForce) {
  for (const Graph& g : {testing_util::cycle(6), testing_util::path(7), corona_k1(testing_util::cycle(4)),
                         cardinal_product(testing_util::cycle(3), testing_util::cycle(3)).graph}) {
    BnbOptions opts;
    opts.enumerate_all = true;
    const auto bnb = solve_rdrd_bnb(g, opts);
    BruteForceOptions bf;
    bf.enumerate_all = true;
    const auto exact = brute_force(g, Problem::rdrd_min, bf);
    EXPECT_EQ(bnb.value, exact.value);
    EXPECT_EQ(bnb.optima, exact.optima);
    EXPECT_EQ(bnb.optimum_count, exact.optimum_count);
  }
}

TEST(BranchAndBound, ValueInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const Graph& g : corpus()) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(solve_rdrd_bnb(g.relabeled(perm)).value, solve_rdrd_bnb(g).value);
  }
}

TEST(BranchAndBound, CertificatesAlwaysValidate) {
  for (int m = 3; m <= 7; ++m) {
    const Graph g = cardinal_product(testing_util::cycle(3), testing_util::cycle(m)).graph;
    const auto r = solve_rdrd_bnb(g);
    EXPECT_TRUE(is_valid(g, r.certificate));
    EXPECT_EQ(r.value, 2 * m);
  }
}

TEST(BranchAndBound, TimeoutReportsAdmissibleLowerBound) {
  BnbOptions opts;
  opts.timeout_seconds = 1e-6;
  const Graph g = cardinal_product(testing_util::cycle(5), testing_util::cycle(7)).graph;
  const auto r = solve_rdrd_bnb(g, opts);
  EXPECT_LE(r.lower_bound, r.value);
  EXPECT_TRUE(is_valid(g, r.certificate));
  if (!r.optimal) EXPECT_LT(r.lower_bound, 2 * g.order());
}

TEST(DominationChain, HoldsOnSeededRandomGraphs) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const Graph g = random_connected_graph(3 + static_cast<int>(seed % 7), 0.3, seed);
    const int gamma = domination_number(g);
    const int drd = drd_number(g);
    const int rdrd = rdrd_number(g);
    EXPECT_LE(2 * gamma, drd);
    EXPECT_LE(drd, rdrd);
    EXPECT_LE(rdrd, 2 * g.order() - 2);
  }
}
