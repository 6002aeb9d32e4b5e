#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "snfgraph/canonical.hpp"
#include "snfgraph/enumerate.hpp"
#include "snfgraph/families.hpp"

namespace snfgraph {
namespace {

TEST(Enumerate, CountsMatchRelabelingOracle) {
  // Frozen from connected_class_masks: 1, 1, 2, 6, 21, 112.
  const std::uint64_t frozen[] = {1, 1, 2, 6, 21};
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto oracle = testing::connected_class_masks(n);
    ASSERT_EQ(oracle.size(), frozen[n - 1]);
    const auto forms = enumerate_connected_forms(n);
    EXPECT_EQ(forms.size(), oracle.size()) << "n=" << n;
    std::set<std::uint64_t> masks;
    for (const auto& f : forms) masks.insert(testing::brute_force_canonical_mask(f.to_graph()));
    EXPECT_EQ(masks, oracle) << "n=" << n;
  }
}

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(enumerate_connected_forms(6).size(), 112U);
  EXPECT_EQ(enumerate_connected_forms(7).size(), 853U);
}

TEST(Enumerate, BruteForceRouteAgrees) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    EXPECT_EQ(enumerate_connected_brute_force(n), enumerate_connected_forms(n)) << "n=" << n;
  EXPECT_THROW(enumerate_connected_brute_force(8), std::invalid_argument);
}

TEST(Enumerate, SortedUniqueConnectedAndPairwiseNonIsomorphic) {
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const auto forms = enumerate_connected_forms(n);
    EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
    EXPECT_EQ(std::adjacent_find(forms.begin(), forms.end()), forms.end());
    for (const auto& f : forms) {
      const Graph g = f.to_graph();
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(canonical_form(g), f);
    }
  }
}

TEST(Enumerate, IndependentOfJobCount) {
  const auto serial = enumerate_connected_forms(7, {.jobs = 1});
  EXPECT_EQ(enumerate_connected_forms(7, {.jobs = 4}), serial);
  EXPECT_EQ(enumerate_connected_forms(7, {.jobs = 3}), serial);
}

TEST(Enumerate, OrderNineNeedsOptIn) {
  EXPECT_THROW(enumerate_connected_forms(9), std::invalid_argument);
  EXPECT_THROW(enumerate_connected_forms(0), std::invalid_argument);
}

TEST(Verify, OrderFive) {
  const auto s = verify_theorem(5);
  EXPECT_EQ(s.n, 5U);
  EXPECT_EQ(s.total_connected, 21U);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_EQ(s.witness_count(S3Class::EqN), 1U);
  EXPECT_EQ(s.witness_count(S3Class::EqNMinus1), 1U);
  EXPECT_EQ(s.witness_count(S3Class::EqNMinus2), 2U);
  EXPECT_EQ(s.witness_count(S3Class::EqNMinus3), 2U);
  std::uint64_t histogram_total = 0;
  for (const auto& [s3, count] : s.s3_histogram) {
    EXPECT_GE(s3, 1U);
    EXPECT_LE(s3, 5U);
    histogram_total += count;
  }
  EXPECT_EQ(histogram_total, 20U);  // K5 is excluded
  EXPECT_EQ(s.witnesses.at(S3Class::EqN).front(), canonical_form(complete_minus_edge(5)));
}

TEST(Verify, OrdersSixAndEight) {
  const auto six = verify_theorem(6);
  EXPECT_TRUE(six.violations.empty());
  EXPECT_EQ(six.witness_count(S3Class::EqNMinus2), 0U);
  EXPECT_EQ(six.witness_count(S3Class::EqNMinus3), 2U);

  const auto eight = verify_theorem(8);
  EXPECT_EQ(eight.total_connected, 11117U);
  EXPECT_TRUE(eight.violations.empty());
  EXPECT_EQ(eight.witness_count(S3Class::EqN), 1U);
  EXPECT_EQ(eight.witness_count(S3Class::EqNMinus1), 1U);
  EXPECT_EQ(eight.witness_count(S3Class::EqNMinus3), 0U);
}

TEST(Verify, DeterministicAcrossJobs) {
  VerifyOptions one, many;
  one.enumeration.jobs = 1;
  many.enumeration.jobs = 5;
  EXPECT_EQ(verify_theorem(7, one), verify_theorem(7, many));
}

TEST(Verify, SideClaimsHold) {
  for (std::uint32_t n = 3; n <= 7; ++n) EXPECT_TRUE(verify_side_claims(n).empty()) << n;
}

TEST(Verify, DisabledChainPassIsCaught) {
  VerifyOptions broken;
  broken.snf.enforce_divisibility_chain = false;
  std::vector<ViolationRecord> violations;
  for (std::uint32_t n = 3; n <= 8 && violations.empty(); ++n)
    violations = verify_side_claims(n, broken);
  ASSERT_FALSE(violations.empty());
  EXPECT_TRUE(std::any_of(violations.begin(), violations.end(),
                          [](const ViolationRecord& v) { return v.claim == Claim::Chain; }));
}

TEST(Verify, RangeErrors) {
  EXPECT_THROW(verify_theorem(4), std::invalid_argument);
  EXPECT_THROW(verify_theorem(9), std::invalid_argument);
  EXPECT_THROW(verify_side_claims(2), std::invalid_argument);
}

}  // namespace
}  // namespace snfgraph
