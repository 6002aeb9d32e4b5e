#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "snfgraph/analysis.hpp"
#include "snfgraph/canonical.hpp"
#include "snfgraph/enumerate.hpp"
#include "snfgraph/families.hpp"

namespace snfgraph {
namespace {

using testing::big;

TEST(Profile, CompleteBipartite) {
  const auto p23 = invariant_profile(complete_bipartite(2, 3));
  EXPECT_EQ(p23.factors, big({1, 1, 2, 6, 0}));
  EXPECT_EQ(p23.tree_count, 12);
  EXPECT_EQ(p23.s2, 1);
  EXPECT_EQ(p23.s3, 2);
  EXPECT_EQ(p23.diameter, 2U);

  const auto p33 = invariant_profile(complete_bipartite(3, 3));
  EXPECT_EQ(p33.factors, big({1, 1, 3, 3, 9, 0}));
  EXPECT_EQ(p33.tree_count, 81);
}

TEST(Profile, TreeCountOfK5MatchesCofactorOracle) {
  const IntMatrix l = laplacian(complete(5));
  IntMatrix reduced(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) reduced(r, c) = l(r + 1, c + 1);
  ASSERT_EQ(testing::cofactor_determinant(reduced), 125);
  EXPECT_EQ(invariant_profile(complete(5)).tree_count, 125);
}

TEST(Profile, DivisorsOnRequest) {
  const auto p = invariant_profile(complete(5), ProfileOptions{.with_divisors = true});
  ASSERT_TRUE(p.deltas.has_value());
  EXPECT_EQ(*p.deltas, big({1, 1, 5, 25, 125, 0}));
  EXPECT_FALSE(invariant_profile(complete(5)).deltas.has_value());
  EXPECT_FALSE(invariant_profile(complete(10), ProfileOptions{.with_divisors = true})
                   .deltas.has_value());
}

TEST(Profile, RejectsDisconnected) {
  EXPECT_THROW(invariant_profile(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  EXPECT_THROW(spanning_tree_count(Graph(3)), std::invalid_argument);
  EXPECT_THROW(classify_s3(Graph(6)), std::invalid_argument);
}

TEST(Profile, SmallOrders) {
  const auto p1 = invariant_profile(Graph(1));
  EXPECT_EQ(p1.factors, big({0}));
  EXPECT_EQ(p1.tree_count, 1);
  EXPECT_FALSE(p1.s2.has_value());
  const auto p2 = invariant_profile(complete(2));
  EXPECT_EQ(p2.factors, big({1, 0}));
  EXPECT_FALSE(p2.s3.has_value());
}

TEST(SpanningTrees, Examples) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(spanning_tree_count(path(n)), 1);
    EXPECT_EQ(spanning_tree_count(star(std::max(n, 2U))), 1);
  }
  EXPECT_EQ(spanning_tree_count(complete_minus_triangle(5)), 20);
  EXPECT_EQ(spanning_tree_count(complete_minus_triangle(6)), 324);
  // Cayley: n^(n-2).
  EXPECT_EQ(spanning_tree_count(complete(8)), 262144);
  EXPECT_EQ(spanning_tree_count(cycle(9)), 9);
}

TEST(S2, LemmaExamples) {
  EXPECT_TRUE(s2_is_nontrivial(complete(6)));
  EXPECT_EQ(invariant_profile(complete(6)).s2, 6);
  EXPECT_FALSE(s2_is_nontrivial(complete_minus_edge(6)));
  EXPECT_FALSE(s2_is_nontrivial(path(5)));
  EXPECT_THROW(s2_is_nontrivial(complete(2)), std::invalid_argument);
}

TEST(S2, LemmaHoldsExhaustivelyUpToSeven) {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    std::size_t nontrivial = 0;
    for (const Graph& g : enumerate_connected(n)) {
      const bool s2_big = s2_is_nontrivial(g);
      EXPECT_EQ(s2_big, is_complete(g)) << "n=" << n;
      nontrivial += s2_big;
    }
    EXPECT_EQ(nontrivial, 1U);
  }
}

TEST(Classify, TheoremExamples) {
  const auto kme = classify_s3(complete_minus_edge(6));
  EXPECT_EQ(kme.s3_class, S3Class::EqN);
  EXPECT_EQ(kme.matched_family, Family::CompleteMinusEdge);
  EXPECT_TRUE(kme.structural_check_passed);

  const auto pend = classify_s3(pendant_complete(6));
  EXPECT_EQ(pend.s3_class, S3Class::EqNMinus1);
  EXPECT_EQ(pend.matched_family, Family::PendantComplete);
  EXPECT_EQ(pend.profile.factors, big({1, 1, 5, 5, 5, 0}));

  const auto c4 = classify_s3(complete_minus_c4());
  EXPECT_EQ(c4.s3_class, S3Class::EqNMinus2);
  EXPECT_EQ(c4.matched_family, Family::CompleteMinusC4);
  EXPECT_TRUE(c4.structural_check_passed);

  const auto k33 = classify_s3(complete_minus_k33());
  EXPECT_EQ(k33.s3_class, S3Class::EqNMinus3);
  EXPECT_EQ(k33.profile.s3, 4);
  EXPECT_EQ(k33.matched_family, Family::CompleteMinusK33);

  const auto p6 = classify_s3(path(6));
  EXPECT_EQ(p6.s3_class, S3Class::Other);
  EXPECT_EQ(p6.profile.s3, 1);
  EXPECT_EQ(p6.profile.diameter, 5U);
  EXPECT_FALSE(p6.matched_family.has_value());
  EXPECT_TRUE(p6.structural_check_passed);
}

TEST(Classify, SpecialClasses) {
  const auto k7 = classify_s3(complete(7));
  EXPECT_EQ(k7.s3_class, S3Class::CompleteGraph);
  EXPECT_EQ(k7.profile.s3, 7);
  EXPECT_FALSE(k7.matched_family.has_value());

  const auto small = classify_s3(complete_bipartite(2, 2));
  EXPECT_EQ(small.s3_class, S3Class::NotApplicable);
  EXPECT_EQ(small.profile.factors, big({1, 1, 4, 0}));  // C4
}

TEST(Classify, LargerOrdersStillIdentifyFamilies) {
  for (std::uint32_t n = 9; n <= 12; ++n) {
    const auto r = classify_s3(complete_minus_edge(n));
    EXPECT_EQ(r.s3_class, S3Class::EqN);
    EXPECT_EQ(r.matched_family, Family::CompleteMinusEdge);
    EXPECT_TRUE(r.structural_check_passed);
    const auto p = classify_s3(pendant_complete(n));
    EXPECT_EQ(p.s3_class, S3Class::EqNMinus1);
    EXPECT_TRUE(p.structural_check_passed);
  }
}

TEST(Classify, DeterministicAcrossRelabelings) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t n = 5 + i % 4;
    const Graph g = i % 3 == 0 ? family(prescribed_families(S3Class::EqN, n)[0], n)
                               : testing::random_connected_graph(rng, n);
    const auto base = classify_s3(g);
    for (int k = 0; k < 5; ++k) {
      const auto again = classify_s3(g.relabeled(testing::random_permutation(rng, n)));
      EXPECT_EQ(again.s3_class, base.s3_class);
      EXPECT_EQ(again.matched_family, base.matched_family);
      EXPECT_EQ(again.profile.factors, base.profile.factors);
      EXPECT_EQ(again.structural_check_passed, base.structural_check_passed);
    }
  }
}

TEST(Classify, NameRoundTrip) {
  for (auto c : {S3Class::EqN, S3Class::EqNMinus1, S3Class::EqNMinus2, S3Class::EqNMinus3,
                 S3Class::Other, S3Class::CompleteGraph, S3Class::NotApplicable}) {
    EXPECT_EQ(s3_class_from_name(s3_class_name(c)), c);
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(expected_snf_for_family(Family::Complete, 7), big({1, 7, 7, 7, 7, 7, 0}));
  EXPECT_EQ(expected_snf_for_family(Family::CompleteMinusEdge, 6), big({1, 1, 6, 6, 24, 0}));
  EXPECT_EQ(expected_snf_for_family(Family::Case7, 6), big({1, 1, 1, 5, 40, 0}));
  EXPECT_EQ(expected_snf_for_family(Family::PendantComplete, 5), big({1, 1, 4, 4, 0}));
  EXPECT_THROW(expected_snf_for_family(Family::CompleteMinusK33, 7), std::invalid_argument);
  EXPECT_THROW(expected_snf_for_family(Family::CompleteMinusEdge, 4), std::invalid_argument);
}

TEST(ClosedForms, MatchComputedSmithFormsFiveToTwelve) {
  for (Family f : {Family::Complete, Family::CompleteMinusEdge, Family::PendantComplete,
                   Family::Case7}) {
    for (std::uint32_t n = 5; n <= 12; ++n) {
      const auto expected = expected_snf_for_family(f, n);
      ASSERT_EQ(expected.size(), n);
      EXPECT_EQ(invariant_profile(family(f, n)).factors, expected)
          << family_name(f) << " n=" << n;
    }
  }
}

TEST(Invariants, FirstFactorIsOneAndMatrixTreeHolds) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_connected_graph(rng, 2 + i % 10);
    const auto p = invariant_profile(g);  // throws on a matrix-tree mismatch
    EXPECT_EQ(p.factors[0], 1);
    EXPECT_EQ(p.factors.back(), 0);
    EXPECT_EQ(p.tree_count, spanning_tree_count(g));
  }
}

}  // namespace
}  // namespace snfgraph
