#include "fairauction/vcg.hpp"

namespace fairauction {

Money vickrey_discount(AuctionInstance const &instance, Allocation const &alloc,
                       std::string const &bidder)
{
  if (!alloc.wins(bidder))
  {
    throw AuctionError(ErrorKind::NotAWinner, bidder + " wins nothing in this allocation");
  }
  Money const without = optimal_revenue(instance.without_bids_of(bidder));
  return alloc.revenue - without;
}

VcgResult gva_payments(AuctionInstance const &instance, Allocation const &alloc)
{
  VcgResult result;
  for (auto const &winner : alloc.winners())
  {
    BidderPayment entry;
    entry.total_bid = alloc.total_bid_of(winner);
    entry.discount  = vickrey_discount(instance, alloc, winner);
    entry.payment   = entry.total_bid - entry.discount;

    // Removing a winner's bids leaves the rest of the optimum feasible, so
    // the discount can never exceed the winner's own bids.
    if (entry.discount.is_negative() || entry.payment.is_negative())
    {
      throw AuctionError(ErrorKind::InternalInvariant,
                         "GVA payment for " + winner + " out of range: bid " +
                             entry.total_bid.to_exact() + ", discount " +
                             entry.discount.to_exact());
    }

    std::vector<std::pair<ItemSet, Money>> bids;
    for (auto const &w : alloc.winning_bids)
    {
      if (w.bidder == winner)
      {
        bids.emplace_back(w.items, w.amount);
      }
    }
    for (auto &[items, pay] : apportion_payment(entry.payment, bids))
    {
      result.per_package_pay.emplace(std::make_pair(winner, items), std::move(pay));
    }
    result.per_bidder.emplace(winner, std::move(entry));
  }
  return result;
}

std::map<ItemSet, Money> apportion_payment(Money const &payment,
                                           std::vector<std::pair<ItemSet, Money>> const &bids)
{
  Money total;
  for (auto const &[items, amount] : bids)
  {
    total += amount;
  }

  std::map<ItemSet, Money> out;
  if (total.is_zero())
  {
    if (!payment.is_zero())
    {
      throw AuctionError(ErrorKind::ZeroBidApportionment,
                         "cannot split " + payment.to_exact() + " over zero-amount bids");
    }
    for (auto const &[items, amount] : bids)
    {
      out.emplace(items, Money());
    }
    return out;
  }

  for (auto const &[items, amount] : bids)
  {
    out.emplace(items, payment.scaled(amount.ratio_to(total)));
  }
  return out;
}

}  // namespace fairauction
