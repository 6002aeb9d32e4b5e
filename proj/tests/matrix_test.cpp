#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "snfgraph/families.hpp"
#include "snfgraph/graph.hpp"
#include "snfgraph/int_matrix.hpp"
#include "snfgraph/smith.hpp"

namespace snfgraph {
namespace {

using testing::big;
using testing::cofactor_determinant;

IntMatrix reduced(const IntMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i < m.rows(); ++i) keep.push_back(i);
  return submatrix(m, keep, keep);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                        long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
  EXPECT_EQ(determinant(IntMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, ReducedLaplacianOfK5) {
  const IntMatrix r = reduced(laplacian(complete(5)));
  // Frozen from the cofactor-expansion oracle.
  ASSERT_EQ(cofactor_determinant(r), 125);
  EXPECT_EQ(determinant(r), 125);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, n, -9, 9);
    ASSERT_EQ(determinant(m), cofactor_determinant(m)) << m.to_string();
  }
}

TEST(Determinant, ExceedsMachineWords) {
  IntMatrix m(3, 3);
  const BigInt huge("123456789012345678901234567890");
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = huge;
  EXPECT_EQ(determinant(m), huge * huge * huge);
}

TEST(Submatrix, SelectsMinor) {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(submatrix(m, all, all), m);

  const std::vector<std::size_t> r0{0}, c1{1};
  EXPECT_EQ(submatrix(laplacian(complete(3)), r0, c1), (IntMatrix{{-1}}));

  const std::vector<std::size_t> none;
  const IntMatrix empty = submatrix(m, none, none);
  EXPECT_EQ(empty.rows(), 0U);
  EXPECT_EQ(determinant(empty), 1);
}

TEST(Submatrix, RejectsBadIndices) {
  const IntMatrix m = IntMatrix::identity(3);
  const std::vector<std::size_t> out_of_range{0, 3}, unsorted{1, 0}, repeated{1, 1}, ok{0, 1};
  EXPECT_THROW(submatrix(m, out_of_range, ok), std::out_of_range);
  EXPECT_THROW(submatrix(m, ok, unsorted), std::invalid_argument);
  EXPECT_THROW(submatrix(m, repeated, ok), std::invalid_argument);
}

TEST(DeterminantalDivisors, Examples) {
  const IntMatrix lk3 = laplacian(complete(3));
  ASSERT_EQ(testing::minor_gcds(lk3), big({1, 1, 3, 0}));
  EXPECT_EQ(determinantal_divisors(lk3).deltas, big({1, 1, 3, 0}));

  EXPECT_EQ(determinantal_divisors(IntMatrix(3, 3)).deltas, big({1, 0, 0, 0}));

  const IntMatrix lk5 = laplacian(complete(5));
  ASSERT_EQ(testing::minor_gcds(lk5), big({1, 1, 5, 25, 125, 0}));
  EXPECT_EQ(determinantal_divisors(lk5).deltas, big({1, 1, 5, 25, 125, 0}));
  EXPECT_EQ(determinantal_divisors(lk5).invariant_factors(), big({1, 5, 5, 5, 0}));
}

TEST(DeterminantalDivisors, MatchesCofactorOracleOnRandomMatrices) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, 2 + trial % 4, 2 + trial % 4, -4, 4);
    EXPECT_EQ(determinantal_divisors(m).deltas, testing::minor_gcds(m)) << m.to_string();
  }
}

TEST(DeterminantalDivisors, Bounds) {
  EXPECT_THROW(determinantal_divisors(IntMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(determinantal_divisors(IntMatrix::identity(10)), std::invalid_argument);
}

TEST(Smith, PaperDiagonals) {
  EXPECT_EQ(smith_normal_form(laplacian(complete(5)), false).factors, big({1, 5, 5, 5, 0}));
  EXPECT_EQ(invariant_factors(laplacian(complete_minus_2e())), big({1, 1, 3, 15, 0}));
  EXPECT_EQ(invariant_factors(laplacian(complete_minus_2triangles())),
            big({1, 1, 4, 4, 4, 28, 0}));
  EXPECT_EQ(invariant_factors(laplacian(complete_minus_c4())), big({1, 1, 3, 3, 0}));
  EXPECT_EQ(invariant_factors(laplacian(complete_minus_p4())), big({1, 1, 1, 21, 0}));
  EXPECT_EQ(invariant_factors(laplacian(pendant_complete(5))), big({1, 1, 4, 4, 0}));
}

TEST(Smith, SmallMatrices) {
  EXPECT_EQ(invariant_factors(IntMatrix{{2, 0}, {0, 3}}), big({1, 6}));
  EXPECT_EQ(invariant_factors(IntMatrix{{-4, 0}, {0, 6}}), big({2, 12}));
  EXPECT_EQ(invariant_factors(IntMatrix{{0, 0}, {0, 5}}), big({5, 0}));
  EXPECT_EQ(invariant_factors(IntMatrix(3, 3)), big({0, 0, 0}));
  EXPECT_EQ(invariant_factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            big({2, 6, 12}));
  EXPECT_EQ(invariant_factors(IntMatrix{{6, 4}, {4, 6}, {2, 2}}), big({2, 2}));
}

TEST(Smith, WithoutChainPassDiagonalCanBreakDivisibility) {
  const auto raw = smith_normal_form(IntMatrix{{2, 0}, {0, 3}},
                                     SnfOptions{.enforce_divisibility_chain = false});
  EXPECT_EQ(raw.factors, big({2, 3}));
  EXPECT_FALSE(satisfies_divisibility_chain(raw.factors));
}

TEST(Smith, ChainPredicate) {
  EXPECT_TRUE(satisfies_divisibility_chain(big({1, 2, 4, 0, 0})));
  EXPECT_FALSE(satisfies_divisibility_chain(big({1, 0, 4})));
  EXPECT_FALSE(satisfies_divisibility_chain(big({2, 3})));
  EXPECT_FALSE(satisfies_divisibility_chain(big({-1, 2})));
}

void expect_valid_transforms(const IntMatrix& m) {
  const SnfResult r = smith_normal_form(m, true);
  ASSERT_TRUE(r.transforms.has_value());
  const auto& [u, v] = *r.transforms;
  EXPECT_EQ(abs(determinant(u)), 1);
  EXPECT_EQ(abs(determinant(v)), 1);
  IntMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < r.factors.size(); ++i) d(i, i) = r.factors[i];
  EXPECT_EQ(u * m * v, d) << m.to_string();
  EXPECT_TRUE(satisfies_divisibility_chain(r.factors));
  EXPECT_EQ(r.factors, smith_normal_form(m, false).factors);
}

TEST(Smith, TransformsReproduceDiagonal) {
  expect_valid_transforms(IntMatrix{{2, 0}, {0, 3}});
  expect_valid_transforms(IntMatrix{{0, 0}, {0, 5}});
  expect_valid_transforms(laplacian(complete_minus_2triangles()));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    expect_valid_transforms(random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, -12, 12));
    expect_valid_transforms(laplacian(testing::random_graph(rng, 2 + trial % 8)));
  }
}

TEST(Smith, PermutationInvariance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 2 + trial % 7;
    const IntMatrix l = laplacian(testing::random_graph(rng, n));
    const IntMatrix p = testing::permutation_matrix(testing::random_permutation(rng, n));
    EXPECT_EQ(invariant_factors(p * l * testing::transpose(p)), invariant_factors(l));
  }
}

TEST(Smith, FactorsEqualDivisorQuotientsOnConnectedGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t n = 2 + trial % 6;
    const IntMatrix l = laplacian(testing::random_connected_graph(rng, n));
    const auto factors = invariant_factors(l);
    ASSERT_TRUE(satisfies_divisibility_chain(factors));
    ASSERT_EQ(factors, determinantal_divisors(l).invariant_factors()) << l.to_string();
  }
}

TEST(Smith, LargeEntries) {
  const BigInt p("1000000000000000000000007");
  const BigInt q("998244353998244353");
  IntMatrix m(2, 2);
  m(0, 0) = p * 6;
  m(1, 1) = q * 4;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), m(0, 0).get_mpz_t(), m(1, 1).get_mpz_t());
  EXPECT_EQ(invariant_factors(m), (std::vector<BigInt>{g, p * q * 24 / g}));
}

}  // namespace
}  // namespace snfgraph
