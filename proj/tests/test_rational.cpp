#include <gtest/gtest.h>

#include "ringlab/rational.hpp"

using ringlab::Rational;

TEST(Rational, ReducesToLowestTerms) {
  EXPECT_EQ(Rational(6, 8), Rational(3, 4));
  EXPECT_EQ(Rational(0, 5).num, 0);
  EXPECT_EQ(Rational(0, 5).den, 1);
  EXPECT_EQ(Rational(-4, 6), Rational(-2, 3));
  EXPECT_EQ(Rational(4, -6), Rational(-2, 3));
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), ringlab::Error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(5, 8) * Rational::one(), Rational(5, 8));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(5, 8), Rational(3, 4));
  EXPECT_LE(Rational(3, 4), Rational(3, 4));
  EXPECT_GT(Rational::one(), Rational(3, 4));
  EXPECT_FALSE(Rational(1, 3) > Rational(1, 2));
}

TEST(Rational, WireFormat) {
  EXPECT_EQ(Rational(5, 8).str(), "5/8");
  EXPECT_EQ(Rational::one().str(), "1/1");
  EXPECT_EQ(Rational(3, 4).pretty(), "3/4");
  EXPECT_EQ(Rational(2).pretty(), "2");
  ASSERT_TRUE(Rational::parse("5/8").has_value());
  EXPECT_EQ(*Rational::parse("5/8"), Rational(5, 8));
  EXPECT_EQ(*Rational::parse("3"), Rational(3));
  EXPECT_FALSE(Rational::parse("x/y").has_value());
}
