#pragma once

#include "fairauction/model.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fairauction {

struct WinningBid
{
  std::string bidder;
  ItemSet     items;
  Money       amount;

  friend bool operator==(WinningBid const &, WinningBid const &) = default;
};

/// A feasible set of winning bids. `winning_bids` is kept in canonical order,
/// sorted by (bidder id, item set).
struct Allocation
{
  std::vector<WinningBid> winning_bids;
  Money                   revenue;

  /// Winning bidders in id order, without repeats.
  std::vector<std::string> winners() const;
  Package                  package_of(std::string const &bidder) const;
  Money                    total_bid_of(std::string const &bidder) const;
  bool                     wins(std::string const &bidder) const;

  friend bool operator==(Allocation const &, Allocation const &) = default;
};

/// Several bidders offered the same amount on the same winning set.
struct TieGroup
{
  ItemSet                  items;
  Money                    amount;
  std::vector<std::string> contenders;  // sorted by id, at least two
  std::string              winner_of_record;

  friend bool operator==(TieGroup const &, TieGroup const &) = default;
};

/// Total order used to pick among optimal allocations: higher revenue first,
/// then fewer winning bids, then the lexicographically smallest canonical
/// (bidder id, item set) sequence. Returns true if `a` is preferred to `b`.
bool preferred_allocation(Allocation const &a, Allocation const &b);

/// Sorts the bids canonically and recomputes revenue.
Allocation make_allocation(std::vector<WinningBid> bids);

struct SolveStats
{
  std::size_t candidate_bids = 0;  // positive bids entering the search
  std::size_t dominated_bids = 0;  // removed by dominance preprocessing
  std::size_t nodes          = 0;  // search nodes expanded
};

/// Revenue-maximizing allocation under OR-bid semantics with free disposal.
///
/// Depth-first branch and bound that branches on the lowest undecided
/// resource: either one of the bids whose lowest item it is, or leaving it
/// unsold. The bound adds, for each undecided resource, the best per-item
/// price among bids that still fit. Zero-amount bids and strictly dominated
/// bids never enter the search.
///
/// Throws EmptyAuction if the instance has no positive bid.
Allocation solve_wdp(AuctionInstance const &instance, SolveStats *stats = nullptr);

/// Optimal revenue, or zero when there is nothing to allocate.
Money optimal_revenue(AuctionInstance const &instance);

/// Exhaustive oracle for solve_wdp. Enumerates every set of pairwise-disjoint
/// positive bids. Throws InstanceTooLarge above `max_resources` resources.
Allocation solve_wdp_bruteforce(AuctionInstance const &instance, std::size_t max_resources = 8);

/// Throws InternalInvariant unless `alloc` is feasible for `instance`:
/// disjoint sets, bids present verbatim, revenue equal to their sum.
void check_allocation(AuctionInstance const &instance, Allocation const &alloc);

std::vector<TieGroup> detect_ties(AuctionInstance const &instance, Allocation const &alloc);

}  // namespace fairauction
