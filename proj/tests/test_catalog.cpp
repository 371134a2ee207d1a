#include <gtest/gtest.h>

#include "rdrd/catalog.hpp"
#include "rdrd/error.hpp"
#include "rdrd/products.hpp"
#include "rdrd/solver.hpp"
#include "test_helpers.hpp"

using namespace rdrd;

namespace {

CatalogParams with_n(int n) {
  CatalogParams p;
  p.n = n;
  return p;
}

CatalogParams strip(int rows, int m) {
  CatalogParams p;
  p.rows = rows;
  p.m = m;
  return p;
}

CatalogParams kpq(int p, int q) {
  CatalogParams c;
  c.p = p;
  c.q = q;
  return c;
}

}  // namespace

TEST(CatalogValue, Examples) {
  EXPECT_EQ(catalog_value(CatalogFamily::cycle, with_n(7)).value, 9);
  EXPECT_EQ(catalog_value(CatalogFamily::strong_strip, strip(3, 7)).value, 9);
  EXPECT_EQ(catalog_value(CatalogFamily::corona_kpq, kpq(2, 3)).value, 12);
  CatalogParams c3;
  c3.m = 5;
  EXPECT_EQ(catalog_value(CatalogFamily::c3xcm, c3).value, 10);
}

TEST(CatalogValue, SmallPathConstants) {
  EXPECT_EQ(catalog_value(CatalogFamily::path, with_n(1)).value, 2);
  EXPECT_EQ(catalog_value(CatalogFamily::path, with_n(2)).value, 3);
  EXPECT_EQ(catalog_value(CatalogFamily::path, with_n(3)).value, 4);
  EXPECT_EQ(catalog_value(CatalogFamily::path, with_n(9)).value, 11);
}

TEST(CatalogValue, PreconditionsAreEnforced) {
  EXPECT_THROW(catalog_value(CatalogFamily::cycle, with_n(2)), InapplicableError);
  EXPECT_THROW(catalog_value(CatalogFamily::strong_strip, strip(4, 3)), InapplicableError);

  CatalogParams isolated;
  isolated.g = testing_util::path(2);
  isolated.h = testing_util::empty(2);
  try {
    catalog_value(CatalogFamily::corona_general, isolated);
    FAIL() << "expected inapplicable";
  } catch (const InapplicableError& e) {
    EXPECT_NE(std::string(e.what()).find("formula inapplicable"), std::string::npos);
  }

  CatalogParams single;
  single.g = testing_util::complete(1);
  EXPECT_THROW(catalog_value(CatalogFamily::corona_double, single), InapplicableError);

  CatalogParams odd;
  odd.g = testing_util::cycle(5);
  EXPECT_THROW(catalog_value(CatalogFamily::p2x_bipartite, odd), InapplicableError);
}

TEST(CatalogValue, OddCycleUsesCycleFormulaAndRecordsPublishedCongruence) {
  const int expected[] = {6, 12, 16};
  for (int n = 1; n <= 3; ++n) {
    const auto r = catalog_value(CatalogFamily::p2x_odd_cycle, with_n(n));
    EXPECT_EQ(r.value, expected[n - 1]);
    ASSERT_TRUE(r.published_value.has_value());
  }
  EXPECT_NE(*catalog_value(CatalogFamily::p2x_odd_cycle, with_n(1)).published_value, 6);
}

TEST(CatalogValue, BipartiteFactorDoublesCatalogValue) {
  for (int n = 1; n <= 8; ++n) {
    CatalogParams p;
    p.g = testing_util::path(n);
    EXPECT_EQ(catalog_value(CatalogFamily::p2x_bipartite, p).value,
              2 * catalog_value(CatalogFamily::path, with_n(n)).value);
  }
  for (int n = 4; n <= 10; n += 2) {
    CatalogParams p;
    p.g = testing_util::cycle(n);
    EXPECT_EQ(catalog_value(CatalogFamily::p2x_bipartite, p).value,
              2 * catalog_value(CatalogFamily::cycle, with_n(n)).value);
  }
}

TEST(CatalogGraph, FamiliesHaveExpectedShape) {
  CatalogParams c3;
  c3.m = 4;
  EXPECT_EQ(catalog_graph(CatalogFamily::c3xcm, c3),
            cardinal_product(testing_util::cycle(3), testing_util::cycle(4)).graph);
  EXPECT_EQ(catalog_graph(CatalogFamily::p2x_odd_cycle, with_n(2)).order(), 10);
  EXPECT_EQ(catalog_graph(CatalogFamily::corona_kpq, kpq(2, 3)).order(), 10);
  CatalogParams ws;
  ws.q = 3;
  EXPECT_EQ(catalog_graph(CatalogFamily::wounded_spider, ws).order(), 6);
}

TEST(CatalogBounds, Examples) {
  const auto card = catalog_bounds(BoundId::cardinal, testing_util::cycle(3), testing_util::cycle(3));
  EXPECT_EQ(card.lower, 6);
  EXPECT_EQ(card.upper, 16);

  const auto str4 = catalog_bounds(BoundId::strong_str4, testing_util::complete(3), testing_util::complete(3));
  EXPECT_EQ(str4.upper, 3);

  const auto corona = catalog_bounds(BoundId::corona_k1, testing_util::path(4));
  EXPECT_EQ(corona.lower, 9);
  EXPECT_EQ(corona.upper, 12);

  EXPECT_THROW(catalog_bounds(BoundId::connected_upper, testing_util::path(2)), InapplicableError);
  EXPECT_THROW(catalog_bounds(BoundId::strong_ob1, testing_util::path(3)), InapplicableError);
}

TEST(CatalogBounds, SandwichExactValues) {
  const std::vector<Graph> factors = {testing_util::path(3), testing_util::path(4), testing_util::cycle(3),
                                      testing_util::cycle(4), testing_util::complete(3)};
  for (const Graph& g : factors) {
    for (const Graph& h : factors) {
      const int strong = rdrd_number(strong_product(g, h).graph);
      const auto ob1 = catalog_bounds(BoundId::strong_ob1, g, h);
      ASSERT_LE(*ob1.lower, strong);
      ASSERT_GE(*ob1.upper, strong);
      const auto str4 = catalog_bounds(BoundId::strong_str4, g, h);
      ASSERT_GE(*str4.upper, strong);

      const int card = rdrd_number(cardinal_product(g, h).graph);
      const auto cb = catalog_bounds(BoundId::cardinal, g, h);
      ASSERT_LE(*cb.lower, card);
      if (cb.upper) ASSERT_GE(*cb.upper, card);
    }
    const int corona = rdrd_number(corona_k1(g));
    const auto ck = catalog_bounds(BoundId::corona_k1, g);
    ASSERT_LE(*ck.lower, corona);
    ASSERT_GE(*ck.upper, corona);
    const auto cu = catalog_bounds(BoundId::connected_upper, g);
    ASSERT_GE(*cu.upper, rdrd_number(g));
  }
}

TEST(Crosscheck, C3xCmMatches) {
  std::vector<CatalogParams> inst;
  for (int m = 3; m <= 5; ++m) {
    CatalogParams p;
    p.m = m;
    inst.push_back(p);
  }
  const auto r = catalog_crosscheck(CatalogFamily::c3xcm, inst);
  EXPECT_EQ(r.matches, 3);
  EXPECT_EQ(r.mismatches, 0);
  for (const auto& row : r.rows) EXPECT_EQ(*row.solver, 2 * row.param_values.at("m"));
}

TEST(Crosscheck, PathCoronaMatchesIncludingSingleVertex) {
  std::vector<CatalogParams> inst;
  for (int n = 1; n <= 6; ++n) inst.push_back(with_n(n));
  const auto r = catalog_crosscheck(CatalogFamily::corona_pn, inst);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_EQ(*r.rows[0].solver, 3);
}

TEST(Crosscheck, SkipsInstancesAboveBudget) {
  CrosscheckBudget budget;
  budget.max_order = 10;
  const auto r = catalog_crosscheck(CatalogFamily::cycle, {with_n(8), with_n(12)}, budget);
  EXPECT_EQ(r.matches, 1);
  EXPECT_EQ(r.skipped, 1);
}

// The closed form for K_{1,q} ⊙ K1 is recorded as a mismatch, not an error:
// K_{1,2} ⊙ K1 = P3 ⊙ K1 has value 8, one below 3(p+q).
TEST(Crosscheck, StarCoronaDiscrepancyIsReportedAsFinding) {
  const auto r = catalog_crosscheck(CatalogFamily::corona_kpq, {kpq(1, 1), kpq(1, 2), kpq(1, 3)});
  EXPECT_TRUE(r.rows[0].match);
  EXPECT_EQ(*r.rows[1].formula, 9);
  EXPECT_EQ(*r.rows[1].solver, 8);
  EXPECT_EQ(*r.rows[2].solver, 11);
  EXPECT_EQ(r.mismatches, 2);
  CatalogParams p3;
  p3.n = 3;
  EXPECT_EQ(catalog_value(CatalogFamily::corona_pn, p3).value, *r.rows[1].solver);
  const auto a12 = testing_util::to_matrix(catalog_graph(CatalogFamily::corona_kpq, kpq(1, 2)));
  const auto a13 = testing_util::to_matrix(catalog_graph(CatalogFamily::corona_kpq, kpq(1, 3)));
  EXPECT_EQ(oracle::min_weight(a12, true), 8);
  EXPECT_EQ(oracle::min_weight(a13, true), 11);
}

TEST(DominationChain, RejectsDisconnected) {
  EXPECT_THROW(domination_chain(testing_util::empty(4)), InapplicableError);
  EXPECT_TRUE(domination_chain(testing_util::cycle(6)).holds);
}
