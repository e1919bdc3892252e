#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fairauction {

/// Exact rational number. Used for shares, weights and scale factors.
using Rational = boost::multiprecision::cpp_rational;

/// Renders an exact rational as "p" or "p/q" in lowest terms.
std::string to_exact_string(Rational const &value);

/// Rounds half away from zero to `places` decimals and renders with exactly
/// that many fractional digits ("24.58", "-0.50", "7.00").
std::string to_fixed_string(Rational const &value, int places = 2);

/// Rounds each value to `places` decimals so that the rounded parts still sum
/// to the rounded total (largest-remainder method). Values must be
/// non-negative. Returns the rounded values in input order as fixed strings.
std::vector<std::string> round_preserving_sum(std::vector<Rational> const &values,
                                              int places = 2);

/// Parses "12", "-3", "0.5", "1.25" or "29/59" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// A monetary quantity in dollars with exact fractional parts.
///
/// Arithmetic never rounds. Rounding only happens in to_fixed(), which is
/// meant for display.
class Money
{
public:
  Money() = default;
  explicit Money(Rational value)
    : value_(std::move(value))
  {}

  static Money from_integer(std::int64_t dollars)
  {
    return Money(Rational(dollars));
  }

  Rational const &value() const
  {
    return value_;
  }

  bool is_zero() const
  {
    return value_ == 0;
  }
  bool is_negative() const
  {
    return value_ < 0;
  }
  bool is_positive() const
  {
    return value_ > 0;
  }
  bool is_integral() const;

  std::string to_exact() const
  {
    return to_exact_string(value_);
  }
  std::string to_fixed(int places = 2) const
  {
    return to_fixed_string(value_, places);
  }
  double to_double() const
  {
    return value_.convert_to<double>();
  }

  Money scaled(Rational const &factor) const
  {
    return Money(value_ * factor);
  }

  /// Ratio of two amounts. `denominator` must be non-zero.
  Rational ratio_to(Money const &denominator) const;

  Money &operator+=(Money const &other)
  {
    value_ += other.value_;
    return *this;
  }
  Money &operator-=(Money const &other)
  {
    value_ -= other.value_;
    return *this;
  }

  friend Money operator+(Money lhs, Money const &rhs)
  {
    lhs += rhs;
    return lhs;
  }
  friend Money operator-(Money lhs, Money const &rhs)
  {
    lhs -= rhs;
    return lhs;
  }
  friend Money operator*(Money const &lhs, Rational const &rhs)
  {
    return lhs.scaled(rhs);
  }

  friend bool operator==(Money const &lhs, Money const &rhs)
  {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(Money const &lhs, Money const &rhs)
  {
    if (lhs.value_ < rhs.value_)
    {
      return std::strong_ordering::less;
    }
    if (rhs.value_ < lhs.value_)
    {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

private:
  Rational value_{0};
};

inline Money max(Money const &a, Money const &b)
{
  return a < b ? b : a;
}

inline Money min(Money const &a, Money const &b)
{
  return b < a ? b : a;
}

}  // namespace fairauction
