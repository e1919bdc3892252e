#pragma once

#include "fairauction/wdp.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fairauction {

struct BidderPayment
{
  Money total_bid;  // sum of the bidder's winning bid amounts
  Money discount;   // Vickrey discount
  Money payment;    // total_bid - discount

  friend bool operator==(BidderPayment const &, BidderPayment const &) = default;
};

struct VcgResult
{
  std::map<std::string, BidderPayment>                per_bidder;
  std::map<std::pair<std::string, ItemSet>, Money>    per_package_pay;

  friend bool operator==(VcgResult const &, VcgResult const &) = default;
};

/// Marginal contribution of `bidder` to revenue: alloc.revenue minus the
/// optimal revenue once all of the bidder's bids are withdrawn.
/// Throws NotAWinner if the bidder wins nothing in `alloc`.
Money vickrey_discount(AuctionInstance const &instance, Allocation const &alloc,
                       std::string const &bidder);

/// Generalized Vickrey payments for every winner, split per winning set.
VcgResult gva_payments(AuctionInstance const &instance, Allocation const &alloc);

/// Splits `payment` over the bidder's winning sets in proportion to their bid
/// amounts. The parts sum to `payment` exactly.
std::map<ItemSet, Money> apportion_payment(Money const &payment,
                                           std::vector<std::pair<ItemSet, Money>> const &bids);

}  // namespace fairauction
