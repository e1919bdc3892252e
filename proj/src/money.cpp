#include "fairauction/money.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fairauction {

namespace mp = boost::multiprecision;

std::string to_exact_string(Rational const &value)
{
  auto const num = mp::numerator(value);
  auto const den = mp::denominator(value);
  if (den == 1)
  {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string to_fixed_string(Rational const &value, int places)
{
  if (places < 0)
  {
    throw std::invalid_argument("to_fixed_string: negative precision");
  }

  mp::cpp_int scale = 1;
  for (int i = 0; i < places; ++i)
  {
    scale *= 10;
  }

  bool const negative = value < 0;
  Rational const magnitude = negative ? Rational(-value) : value;

  // half-up on the magnitude: floor(|v| * scale + 1/2)
  Rational const shifted = magnitude * scale + Rational(1, 2);
  mp::cpp_int const rounded = mp::numerator(shifted) / mp::denominator(shifted);

  mp::cpp_int const whole = rounded / scale;
  mp::cpp_int const frac  = rounded % scale;

  std::string out;
  if (negative && rounded != 0)
  {
    out += '-';
  }
  out += whole.str();
  if (places > 0)
  {
    std::string digits = frac.str();
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::vector<std::string> round_preserving_sum(std::vector<Rational> const &values, int places)
{
  mp::cpp_int scale = 1;
  for (int i = 0; i < places; ++i)
  {
    scale *= 10;
  }

  Rational                 total = 0;
  std::vector<mp::cpp_int> floors;
  std::vector<Rational>    remainders;
  mp::cpp_int              floor_sum = 0;
  for (auto const &v : values)
  {
    if (v < 0)
    {
      throw std::invalid_argument("round_preserving_sum: negative value");
    }
    total += v;
    Rational const scaled = v * scale;
    mp::cpp_int const f   = mp::numerator(scaled) / mp::denominator(scaled);
    floors.push_back(f);
    remainders.push_back(scaled - Rational(f));
    floor_sum += f;
  }

  Rational const total_scaled = total * scale + Rational(1, 2);
  mp::cpp_int const target    = mp::numerator(total_scaled) / mp::denominator(total_scaled);
  mp::cpp_int       missing   = target - floor_sum;

  // hand out the missing units to the largest remainders, earliest first on ties
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i)
  {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t k = 0; missing > 0 && k < order.size(); ++k, --missing)
  {
    floors[order[k]] += 1;
  }

  std::vector<std::string> out;
  out.reserve(values.size());
  for (auto const &f : floors)
  {
    out.push_back(to_fixed_string(Rational(f, scale), places));
  }
  return out;
}

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
  {
    return false;
  }
  for (char c : s)
  {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0)
    {
      return false;
    }
  }
  return true;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix.
mp::cpp_int decimal_digits(std::string_view digits)
{
  mp::cpp_int value = 0;
  for (char c : digits)
  {
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view body = text;
  bool negative         = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
  {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto const slash = body.find('/'); slash != std::string_view::npos)
  {
    auto const num = body.substr(0, slash);
    auto const den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
    {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mp::cpp_int const d = decimal_digits(den);
    if (d == 0)
    {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    result = Rational(decimal_digits(num), d);
  }
  else if (auto const dot = body.find('.'); dot != std::string_view::npos)
  {
    auto const whole = body.substr(0, dot);
    auto const frac  = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
    {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    mp::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
    {
      scale *= 10;
    }
    mp::cpp_int const w = decimal_digits(whole);
    result = Rational(w * scale + decimal_digits(frac), scale);
  }
  else
  {
    if (!all_digits(body))
    {
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    result = Rational(decimal_digits(body));
  }
  return negative ? Rational(-result) : result;
}

bool Money::is_integral() const
{
  return mp::denominator(value_) == 1;
}

Rational Money::ratio_to(Money const &denominator) const
{
  if (denominator.is_zero())
  {
    throw std::domain_error("Money::ratio_to: zero denominator");
  }
  return value_ / denominator.value_;
}

}  // namespace fairauction
