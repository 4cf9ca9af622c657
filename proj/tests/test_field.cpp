#include <gtest/gtest.h>

#include "chainsub/field.hpp"

using namespace chainsub;

namespace {

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, int>> {};

TEST_P(FieldAxioms, RingLawsAndInverses) {
  const auto [p, e] = GetParam();
  const FiniteField k(p, e);
  const std::uint32_t q = k.order();
  for (FieldElem a = 0; a < q; ++a) {
    EXPECT_EQ(k.add(a, k.neg(a)), 0u);
    if (a != 0) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
    for (FieldElem b = 0; b < q; ++b) {
      EXPECT_EQ(k.add(a, b), k.add(b, a));
      EXPECT_EQ(k.mul(a, b), k.mul(b, a));
      for (FieldElem c = 0; c < q; ++c) {
        EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        EXPECT_EQ(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1}, std::pair{3u, 1}, std::pair{5u, 1}, std::pair{7u, 1},
                                           std::pair{2u, 2}, std::pair{2u, 3}, std::pair{3u, 2}));

TEST(FieldMatrix, RankNullspaceSolve) {
  const FiniteField k(3, 1);
  const auto a = FieldMatrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(rank(k, a), 2u);
  const auto ns = nullspace(k, a);
  ASSERT_EQ(ns.rows(), 1u);
  const auto img = apply(k, a, ns.row(0));
  for (auto x : img) EXPECT_EQ(x, 0u);
  const std::vector<FieldElem> b{1, 2, 2};
  const auto x = solve(k, a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(apply(k, a, *x), b);
  EXPECT_FALSE(solve(k, a, std::vector<FieldElem>{1, 0, 0}).has_value());
}

TEST(FieldMatrix, InverseRoundTrip) {
  const FiniteField k(2, 2);
  const auto a = FieldMatrix::from_rows({{1, 2}, {2, 1}}, 2);
  const auto inv = inverse(k, a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(multiply(k, a, *inv), FieldMatrix::identity(2));
}

TEST(Subspaces, EnumerationCountsOverF2) {
  const FiniteField k(2, 1);
  // Gaussian binomials summed: 1 + 7 + 7 + 1 subspaces of F_2^3.
  EXPECT_EQ(subspace::enumerate_all(k, 3).size(), 16u);
  EXPECT_EQ(subspace::enumerate_all(k, 2).size(), 5u);
}

TEST(Subspaces, IntersectionAndImage) {
  const FiniteField k(2, 1);
  const auto a = subspace::span(k, FieldMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3));
  const auto b = subspace::span(k, FieldMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}, 3));
  const auto c = subspace::intersect(k, a, b);
  EXPECT_EQ(c, FieldMatrix::from_rows({{0, 1, 0}}, 3));
  const auto swap = FieldMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(subspace::image(k, swap, b), subspace::span(k, FieldMatrix::from_rows({{1, 0, 0}, {0, 0, 1}}, 3)));
}

}  // namespace
