#include <gtest/gtest.h>

#include "ehrhart/numbers.hpp"

using namespace ehrhart;

TEST(Numbers, ParsesStrictIntegers) {
  EXPECT_EQ(parse_integer("42"), 42);
  EXPECT_EQ(parse_integer(" -7 "), -7);
  EXPECT_EQ(parse_integer("+3"), 3);
  EXPECT_EQ(parse_integer("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_integer("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_integer("0x10"), std::invalid_argument);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
}

TEST(Numbers, ParsesRationals) {
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
}

TEST(Numbers, RendersLowestTerms) {
  EXPECT_EQ(to_string(Rational(10, 4)), "5/2");
  EXPECT_EQ(to_string(Rational(-8, 4)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Numbers, FloorAndCeilDivision) {
  for (int a = -9; a <= 9; ++a) {
    for (int b : {-4, -3, -1, 1, 2, 5}) {
      const double q = static_cast<double>(a) / b;
      EXPECT_EQ(floor_div(a, b), static_cast<int>(std::floor(q))) << a << "/" << b;
      EXPECT_EQ(ceil_div(a, b), static_cast<int>(std::ceil(q))) << a << "/" << b;
    }
  }
}
