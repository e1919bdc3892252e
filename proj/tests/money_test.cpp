#include "fairauction/money.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fairauction;

TEST(Money, ExactStringIsLowestTerms)
{
  EXPECT_EQ(to_exact_string(Rational(58, 118)), "29/59");
  EXPECT_EQ(to_exact_string(Rational(50)), "50");
  EXPECT_EQ(to_exact_string(Rational(-3, 6)), "-1/2");
}

TEST(Money, FixedRoundsHalfUp)
{
  EXPECT_EQ(to_fixed_string(Rational(1, 8)), "0.13");  // 0.125
  EXPECT_EQ(to_fixed_string(Rational(1, 200)), "0.01");
  EXPECT_EQ(to_fixed_string(Rational(1, 201)), "0.00");
  EXPECT_EQ(to_fixed_string(Rational(5, 2), 0), "3");
  EXPECT_EQ(to_fixed_string(Rational(7)), "7.00");
  EXPECT_EQ(to_fixed_string(Rational(-1, 8)), "-0.13");
  EXPECT_EQ(to_fixed_string(Rational(-1, 1000)), "0.00");
  EXPECT_EQ(to_fixed_string(Rational(50 * 29, 59)), "24.58");
  EXPECT_EQ(to_fixed_string(Rational(50 * 30, 59)), "25.42");
  EXPECT_EQ(to_fixed_string(Rational(2900, 59)), "49.15");
  EXPECT_EQ(to_fixed_string(Rational(3000, 59)), "50.85");
}

TEST(Money, ParseRational)
{
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("29/59"), Rational(29, 59));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.09"), Rational(9, 100));
  EXPECT_EQ(parse_rational("08/09"), Rational(8, 9));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1."), std::invalid_argument);
}

TEST(Money, ArithmeticIsExact)
{
  Money const a = Money::from_integer(50).scaled(Rational(29, 59));
  Money const b = Money::from_integer(50).scaled(Rational(30, 59));
  EXPECT_EQ(a + b, Money::from_integer(50));
  EXPECT_FALSE(a.is_integral());
  EXPECT_EQ(a.ratio_to(a + b), Rational(29, 59));
  EXPECT_THROW(a.ratio_to(Money()), std::domain_error);
}

TEST(Money, LargestRemainderKeepsTheTotal)
{
  auto const parts = round_preserving_sum({Rational(1450, 59), Rational(1500, 59)});
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], "24.58");
  EXPECT_EQ(parts[1], "25.42");

  // three thirds of one dollar: plain rounding gives 0.99
  auto const thirds = round_preserving_sum({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(thirds[0], "0.34");
  EXPECT_EQ(thirds[1], "0.33");
  EXPECT_EQ(thirds[2], "0.33");
}

TEST(Money, LargestRemainderProperty)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial)
  {
    std::vector<Rational> values;
    Rational              total = 0;
    auto const            count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i)
    {
      Rational v(static_cast<long>(rng() % 10000), static_cast<long>(1 + rng() % 97));
      values.push_back(v);
      total += v;
    }
    auto const parts = round_preserving_sum(values);
    Rational   sum   = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
      Rational const r = parse_rational(parts[i]);
      sum += r;
      // every part within one cent of its exact value
      Rational diff = r - values[i];
      if (diff < 0)
      {
        diff = -diff;
      }
      EXPECT_LT(diff, Rational(1, 100));
    }
    EXPECT_EQ(to_fixed_string(sum), to_fixed_string(total));
  }
}
