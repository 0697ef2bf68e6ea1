#include <gtest/gtest.h>

#include "verlinde/prym_theta.hpp"

using namespace verlinde;

TEST(ThetaDim, Examples) {
  EXPECT_EQ(theta_dim(2, 3, Parity::even), 5);
  EXPECT_EQ(theta_dim(2, 8, Parity::even), 34);
  for (int g = 1; g <= 6; ++g) EXPECT_EQ(theta_dim(g, 1, Parity::odd), 0);
  EXPECT_EQ(theta_dim(3, 4, Parity::total), 64);
}

TEST(ThetaDim, ParitiesPartitionTheTotal) {
  for (int m = 1; m <= 12; ++m) {
    for (int g = 1; g <= 8; ++g) {
      const BigInt e = theta_dim(g, m, Parity::even), o = theta_dim(g, m, Parity::odd);
      EXPECT_EQ(e + o, theta_dim(g, m, Parity::total));
      EXPECT_GE(o, 0);
      EXPECT_GE(e, o);
    }
  }
}

TEST(ThetaDim, RejectsBadInput) {
  EXPECT_THROW(theta_dim(0, 3, Parity::even), InvalidArgument);
  EXPECT_THROW(theta_dim(2, 0, Parity::even), InvalidArgument);
  EXPECT_EQ(parse_parity("odd"), Parity::odd);
  EXPECT_THROW(parse_parity("both"), InvalidArgument);
}

TEST(PrymSum, Examples) {
  EXPECT_EQ(prym_sum(2, 3, Parity::even), 35);
  EXPECT_EQ(prym_sum(2, 3, Parity::odd), 19);
  EXPECT_EQ(prym_sum(2, 5, Parity::even), 58);
  EXPECT_EQ(prym_sum(2, 8, Parity::total), 184);
  EXPECT_THROW(prym_sum(1, 3, Parity::even), InvalidArgument);
}

TEST(PrymSum, TotalCountsAllHalfPeriods) {
  for (int g = 2; g <= 6; ++g) {
    for (int m = 1; m <= 9; ++m) {
      EXPECT_EQ(prym_sum(g, m, Parity::even) + prym_sum(g, m, Parity::odd), prym_sum(g, m, Parity::total));
    }
  }
}

TEST(ModuliDimension, Examples) {
  EXPECT_EQ(moduli_dimension(GroupId::sl(2), 2), 3);
  EXPECT_EQ(moduli_dimension(GroupId::spin(7), 3), 42);
  EXPECT_EQ(moduli_dimension(GroupId::sl(4), 2), 15);
  EXPECT_EQ(moduli_dimension(GroupId::spin(8), 2), 28);
  EXPECT_THROW(moduli_dimension(GroupId::sl(2), 1), InvalidArgument);
}
