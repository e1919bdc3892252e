#include "fairauction/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace fairauction {

namespace {

/// Uniform draw in [lo, hi]. std::uniform_int_distribution is not specified
/// bit-for-bit across standard libraries, so roll our own.
std::int64_t draw(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi)
{
  auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
  // reject the biased tail
  std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit)
  {
    x = rng();
  }
  return lo + static_cast<std::int64_t>(x % span);
}

ItemSet random_subset(std::mt19937_64 &rng, std::size_t m)
{
  auto const size = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(m)));
  std::vector<std::size_t> pool(m);
  for (std::size_t i = 0; i < m; ++i)
  {
    pool[i] = i;
  }
  ItemSet items;
  // partial Fisher-Yates
  for (std::size_t i = 0; i < size; ++i)
  {
    auto const j = static_cast<std::size_t>(draw(rng, static_cast<std::int64_t>(i),
                                                 static_cast<std::int64_t>(m - 1)));
    std::swap(pool[i], pool[j]);
    items.insert(pool[i]);
  }
  return items;
}

}  // namespace

RawInstance generate_instance(GeneratorConfig const &config)
{
  if (config.resources == 0 || config.bidders == 0)
  {
    throw std::invalid_argument("generate_instance: need at least one resource and one bidder");
  }
  if (config.resources > ItemSet::kMaxResources)
  {
    throw std::invalid_argument("generate_instance: too many resources");
  }
  if (config.max_amount < 1)
  {
    throw std::invalid_argument("generate_instance: max_amount must be at least 1");
  }

  std::mt19937_64 rng(config.seed);
  std::size_t const m = config.resources;

  RawInstance raw;
  for (std::size_t i = 0; i < m; ++i)
  {
    raw.resources.push_back("r" + std::to_string(i));
  }

  auto random_matrix = [&]() {
    std::vector<std::pair<std::string, Money>> out;
    for (auto const &rid : raw.resources)
    {
      out.emplace_back(rid, Money::from_integer(draw(rng, 1, config.max_amount)));
    }
    return out;
  };

  raw.auctioneer_fairness = random_matrix();

  std::uint64_t const subsets = m >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                        : (std::uint64_t{1} << m) - 1;
  auto const max_bids = static_cast<std::int64_t>(
      std::min<std::uint64_t>(subsets, std::max<std::size_t>(config.max_bids_per_bidder, 1)));

  for (std::size_t b = 0; b < config.bidders; ++b)
  {
    RawBidder bidder;
    bidder.id       = "b" + std::to_string(b);
    bidder.fairness = random_matrix();

    auto const                 count = draw(rng, 1, max_bids);
    std::set<std::uint64_t>    taken;
    while (static_cast<std::int64_t>(taken.size()) < count)
    {
      ItemSet const items = random_subset(rng, m);
      if (!taken.insert(items.mask()).second)
      {
        continue;
      }
      RawBid bid;
      for (auto i : items.indices())
      {
        bid.items.push_back(raw.resources[i]);
      }
      bid.amount = Money::from_integer(draw(rng, 0, config.max_amount));
      bidder.bids.push_back(std::move(bid));
    }
    raw.bidders.push_back(std::move(bidder));
  }
  return raw;
}

}  // namespace fairauction
