#pragma once

#include "fairauction/errors.hpp"
#include "fairauction/item_set.hpp"
#include "fairauction/money.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairauction {

/// Owner label used for the auctioneer's fairness matrix.
inline constexpr std::string_view kAuctioneer = "auctioneer";

// ---------------------------------------------------------------------------
// Unvalidated input, as read from a file or built by hand. Everything is keyed
// by string ids; validate_instance turns it into an AuctionInstance.
// ---------------------------------------------------------------------------

struct RawBid
{
  std::vector<std::string> items;
  Money                    amount;

  friend bool operator==(RawBid const &, RawBid const &) = default;
};

struct RawBidder
{
  std::string                                id;
  std::vector<std::pair<std::string, Money>> fairness;
  std::vector<RawBid>                        bids;

  friend bool operator==(RawBidder const &, RawBidder const &) = default;
};

struct RawInstance
{
  std::vector<std::string>                   resources;
  std::vector<std::pair<std::string, Money>> auctioneer_fairness;
  std::vector<RawBidder>                     bidders;

  friend bool operator==(RawInstance const &, RawInstance const &) = default;
};

// ---------------------------------------------------------------------------
// Validated domain types
// ---------------------------------------------------------------------------

struct Resource
{
  std::string id;
  std::size_t index = 0;

  friend bool operator==(Resource const &, Resource const &) = default;
};

/// Per-resource fair valuations of one agent, aligned with resource indices.
class FairnessMatrix
{
public:
  FairnessMatrix() = default;
  FairnessMatrix(std::string owner, std::vector<Money> entries)
    : owner_(std::move(owner))
    , entries_(std::move(entries))
  {}

  std::string const &owner() const
  {
    return owner_;
  }
  std::vector<Money> const &entries() const
  {
    return entries_;
  }
  std::size_t size() const
  {
    return entries_.size();
  }
  Money const &at(std::size_t resource) const
  {
    return entries_.at(resource);
  }

  FairnessMatrix scaled(Rational const &factor) const;

  friend bool operator==(FairnessMatrix const &, FairnessMatrix const &) = default;

private:
  std::string        owner_;
  std::vector<Money> entries_;
};

/// One atomic OR-bid: `bidder` pays `amount` if it is awarded exactly `items`.
struct Bid
{
  std::string bidder;
  ItemSet     items;
  Money       amount;

  friend bool operator==(Bid const &, Bid const &) = default;
};

struct Bidder
{
  std::string      id;
  FairnessMatrix   fairness;
  std::vector<Bid> bids;

  friend bool operator==(Bidder const &, Bidder const &) = default;
};

/// The collection of resource subsets won by one bidder.
struct Package
{
  std::string          owner;
  std::vector<ItemSet> sets;
};

/// A validated, immutable auction. Only validate_instance() creates one from
/// raw input; the with_*/without_* helpers derive new valid instances.
class AuctionInstance
{
public:
  std::vector<Resource> const &resources() const
  {
    return resources_;
  }
  std::vector<Bidder> const &bidders() const
  {
    return bidders_;
  }
  FairnessMatrix const &auctioneer_fairness() const
  {
    return auctioneer_;
  }
  std::size_t resource_count() const
  {
    return resources_.size();
  }

  Bidder const *find_bidder(std::string_view id) const;
  std::optional<std::size_t> resource_index(std::string_view id) const;

  /// All bids in bidder order, then submission order.
  std::vector<Bid> all_bids() const;
  bool has_positive_bid() const;

  /// "{r0,r2}" using resource ids.
  std::string describe(ItemSet items) const;
  std::vector<std::string> item_ids(ItemSet items) const;

  RawInstance to_raw() const;

  /// Same instance with every bid of `bidder` dropped; the bidder remains.
  AuctionInstance without_bids_of(std::string_view bidder) const;
  AuctionInstance with_auctioneer_scaled(Rational const &factor) const;
  AuctionInstance with_bidder_fairness_scaled(Rational const &factor) const;
  AuctionInstance with_bids_scaled(Rational const &factor) const;

  friend bool operator==(AuctionInstance const &, AuctionInstance const &) = default;

private:
  friend AuctionInstance validate_instance(RawInstance const &raw);

  AuctionInstance() = default;

  std::vector<Resource> resources_;
  std::vector<Bidder>   bidders_;
  FairnessMatrix        auctioneer_;
};

/// Checks every invariant of `raw` and returns the validated instance.
/// Throws ValidationError listing all violations found.
AuctionInstance validate_instance(RawInstance const &raw);

/// Sum of the matrix entries over `items`. Throws UnknownResource if an item
/// lies outside the matrix.
Money fair_value(FairnessMatrix const &matrix, ItemSet items);

/// Sum of fair_value over the package's sets. Throws OverlappingSets if two
/// sets share a resource.
Money package_fair_value(FairnessMatrix const &matrix, Package const &package);

}  // namespace fairauction
