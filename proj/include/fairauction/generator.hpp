#pragma once

#include "fairauction/model.hpp"

#include <cstddef>
#include <cstdint>

namespace fairauction {

struct GeneratorConfig
{
  std::uint64_t seed        = 1;
  std::size_t   resources   = 3;
  std::size_t   bidders     = 3;
  std::int64_t  max_amount  = 20;
  /// Each bidder submits between 1 and this many bids on distinct subsets.
  std::size_t   max_bids_per_bidder = 7;
};

/// Deterministic pseudo-random instance. Resources are "r0".."r{m-1}",
/// bidders "b0".."b{n-1}". Bid amounts lie in 0..max_amount and fairness
/// entries in 1..max_amount. The same config always yields the same
/// instance on every platform (mt19937_64 with hand-rolled range draws).
///
/// Throws std::invalid_argument if resources or bidders is zero, or
/// max_amount < 1.
RawInstance generate_instance(GeneratorConfig const &config);

}  // namespace fairauction
