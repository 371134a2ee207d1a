#include <gtest/gtest.h>

#include "rdrd/error.hpp"
#include "rdrd/labeling.hpp"
#include "test_helpers.hpp"

using namespace rdrd;

TEST(Validate, CycleSixTwoThrees) {
  const Labeling f{3, 0, 0, 3, 0, 0};
  const auto r = validate(testing_util::cycle(6), f);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(f.weight(), 6);
}

TEST(Validate, RestraintIsTheOnlyDifferenceOnP2) {
  const Labeling f{3, 0};
  const auto r = validate(testing_util::path(2), f);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].vertex, 1);
  EXPECT_EQ(r.violations[0].rule, Rule::zero_isolated_in_v0);
  EXPECT_TRUE(is_valid(testing_util::path(2), f, Variant::drd));
}

TEST(Validate, CycleFourZerosWithoutInternalEdge) {
  const Labeling f{3, 0, 2, 0};
  const auto r = validate(testing_util::cycle(4), f);
  EXPECT_FALSE(r.valid);
  for (const auto& v : r.violations) {
    EXPECT_TRUE(v.vertex == 1 || v.vertex == 3);
    EXPECT_EQ(v.rule, Rule::zero_isolated_in_v0);
  }
  EXPECT_EQ(r.violations.size(), 2u);
}

TEST(Validate, ReportsEveryViolation) {
  // Vertex 0 breaks both zero rules; vertices 1 and 2 lack a strong neighbor.
  const Labeling f{0, 1, 1};
  const auto r = validate(testing_util::path(3), f);
  EXPECT_EQ(r.violations.size(), 4u);
  EXPECT_EQ(rule_name(Rule::zero_needs_defense), "ZERO_NEEDS_DEFENSE");
}

TEST(Validate, LengthMismatchThrows) {
  EXPECT_THROW(validate(testing_util::path(3), Labeling{0, 0}), ValidationError);
}

TEST(Labeling, RejectsOutOfRangeLabels) {
  const std::vector<int> bad = {0, 4};
  EXPECT_THROW(Labeling(std::span<const int>(bad)), ValidationError);
  EXPECT_THROW(Labeling({-1}), ValidationError);
}

TEST(Labeling, WeightsAndPartition) {
  EXPECT_EQ(Labeling({0, 0, 0}).weight(), 0);
  EXPECT_EQ(Labeling({3, 0, 0, 3, 0, 0}).weight(), 6);
  EXPECT_EQ(Labeling({2, 1, 2, 1}).weight(), 6);
  const auto parts = Labeling({2, 1, 2, 1}).partition();
  EXPECT_EQ(parts[2], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(Labeling({2, 1, 2, 1}).class_sizes(), (std::array<int, 4>{0, 2, 2, 0}));
}

TEST(Labeling, ParseFormats) {
  EXPECT_EQ(parse_labeling("3 0 2\n1"), Labeling({3, 0, 2, 1}));
  EXPECT_EQ(parse_labeling("{\"labels\":[1,2,3]}"), Labeling({1, 2, 3}));
  EXPECT_THROW(parse_labeling("{\"labels\":[1,\"x\"]}"), ParseError);
  EXPECT_THROW(parse_labeling("1 two"), ParseError);
  EXPECT_THROW(parse_labeling("1 7"), Error);
}

TEST(Validate, AllTwoAndAllThreeAreAlwaysValid) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing_util::all_graphs(n)) {
      ASSERT_TRUE(is_valid(g, Labeling(n, 2)));
      ASSERT_TRUE(is_valid(g, Labeling(n, 3)));
    }
  }
}

TEST(Validate, AgreesWithNaiveOracleOnEveryLabelingUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (const Graph& g : testing_util::all_graphs(n)) {
      const auto a = testing_util::to_matrix(g);
      std::vector<int> labels(n);
      for (int code = 0; code < total; ++code) {
        int c = code;
        for (int i = 0; i < n; ++i) {
          labels[i] = c % 4;
          c /= 4;
        }
        const Labeling f{std::span<const int>(labels)};
        const bool rdrd = is_valid(g, f, Variant::rdrd);
        const bool drd = is_valid(g, f, Variant::drd);
        ASSERT_EQ(rdrd, oracle::valid(a, labels, true));
        ASSERT_EQ(drd, oracle::valid(a, labels, false));
        ASSERT_TRUE(!rdrd || drd);
      }
    }
  }
}
