#include "fairauction/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace fairauction {

FairnessMatrix FairnessMatrix::scaled(Rational const &factor) const
{
  std::vector<Money> entries;
  entries.reserve(entries_.size());
  for (auto const &e : entries_)
  {
    entries.push_back(e.scaled(factor));
  }
  return FairnessMatrix(owner_, std::move(entries));
}

Bidder const *AuctionInstance::find_bidder(std::string_view id) const
{
  auto it = std::find_if(bidders_.begin(), bidders_.end(),
                         [id](Bidder const &b) { return b.id == id; });
  return it == bidders_.end() ? nullptr : &*it;
}

std::optional<std::size_t> AuctionInstance::resource_index(std::string_view id) const
{
  for (auto const &r : resources_)
  {
    if (r.id == id)
    {
      return r.index;
    }
  }
  return std::nullopt;
}

std::vector<Bid> AuctionInstance::all_bids() const
{
  std::vector<Bid> out;
  for (auto const &b : bidders_)
  {
    out.insert(out.end(), b.bids.begin(), b.bids.end());
  }
  return out;
}

bool AuctionInstance::has_positive_bid() const
{
  return std::any_of(bidders_.begin(), bidders_.end(), [](Bidder const &b) {
    return std::any_of(b.bids.begin(), b.bids.end(),
                       [](Bid const &bid) { return bid.amount.is_positive(); });
  });
}

std::vector<std::string> AuctionInstance::item_ids(ItemSet items) const
{
  std::vector<std::string> out;
  for (auto i : items.indices())
  {
    out.push_back(i < resources_.size() ? resources_[i].id : "#" + std::to_string(i));
  }
  return out;
}

std::string AuctionInstance::describe(ItemSet items) const
{
  std::string out = "{";
  bool first      = true;
  for (auto const &id : item_ids(items))
  {
    if (!first)
    {
      out += ',';
    }
    out += id;
    first = false;
  }
  return out + "}";
}

RawInstance AuctionInstance::to_raw() const
{
  auto matrix_pairs = [this](FairnessMatrix const &m) {
    std::vector<std::pair<std::string, Money>> out;
    for (auto const &r : resources_)
    {
      out.emplace_back(r.id, m.at(r.index));
    }
    return out;
  };

  RawInstance raw;
  for (auto const &r : resources_)
  {
    raw.resources.push_back(r.id);
  }
  raw.auctioneer_fairness = matrix_pairs(auctioneer_);
  for (auto const &b : bidders_)
  {
    RawBidder rb;
    rb.id       = b.id;
    rb.fairness = matrix_pairs(b.fairness);
    for (auto const &bid : b.bids)
    {
      rb.bids.push_back(RawBid{item_ids(bid.items), bid.amount});
    }
    raw.bidders.push_back(std::move(rb));
  }
  return raw;
}

AuctionInstance AuctionInstance::without_bids_of(std::string_view bidder) const
{
  AuctionInstance out = *this;
  for (auto &b : out.bidders_)
  {
    if (b.id == bidder)
    {
      b.bids.clear();
    }
  }
  return out;
}

AuctionInstance AuctionInstance::with_auctioneer_scaled(Rational const &factor) const
{
  AuctionInstance out = *this;
  out.auctioneer_     = auctioneer_.scaled(factor);
  return out;
}

AuctionInstance AuctionInstance::with_bidder_fairness_scaled(Rational const &factor) const
{
  AuctionInstance out = *this;
  for (auto &b : out.bidders_)
  {
    b.fairness = b.fairness.scaled(factor);
  }
  return out;
}

AuctionInstance AuctionInstance::with_bids_scaled(Rational const &factor) const
{
  AuctionInstance out = *this;
  for (auto &b : out.bidders_)
  {
    for (auto &bid : b.bids)
    {
      bid.amount = bid.amount.scaled(factor);
    }
  }
  return out;
}

namespace {

using ResourceLookup = std::unordered_map<std::string, std::size_t>;

FairnessMatrix check_matrix(std::string const &owner,
                            std::vector<std::pair<std::string, Money>> const &pairs,
                            std::vector<std::string> const &resources, ResourceLookup const &lookup,
                            std::vector<Violation> &violations)
{
  std::vector<std::optional<Money>> slots(resources.size());
  for (auto const &[rid, amount] : pairs)
  {
    auto it = lookup.find(rid);
    if (it == lookup.end())
    {
      violations.push_back({ErrorKind::MatrixResourceMismatch, owner + "/" + rid,
                            "fairness matrix names undeclared resource"});
      continue;
    }
    if (slots[it->second].has_value())
    {
      violations.push_back({ErrorKind::MatrixResourceMismatch, owner + "/" + rid,
                            "fairness matrix lists resource more than once"});
      continue;
    }
    if (amount.is_negative())
    {
      violations.push_back({ErrorKind::NegativeAmount, owner + "/" + rid,
                            "fair valuation " + amount.to_exact() + " is negative"});
    }
    slots[it->second] = amount;
  }

  std::vector<Money> entries;
  entries.reserve(resources.size());
  for (std::size_t i = 0; i < resources.size(); ++i)
  {
    if (!slots[i].has_value())
    {
      violations.push_back({ErrorKind::MatrixResourceMismatch, owner + "/" + resources[i],
                            "fairness matrix has no entry for resource"});
      entries.emplace_back();
    }
    else
    {
      entries.push_back(*slots[i]);
    }
  }
  return FairnessMatrix(owner, std::move(entries));
}

}  // namespace

AuctionInstance validate_instance(RawInstance const &raw)
{
  std::vector<Violation> violations;

  if (raw.resources.size() > ItemSet::kMaxResources)
  {
    violations.push_back({ErrorKind::TooManyResources, "",
                          std::to_string(raw.resources.size()) + " resources exceed the limit of " +
                              std::to_string(ItemSet::kMaxResources)});
    throw ValidationError(std::move(violations));
  }

  AuctionInstance inst;
  ResourceLookup  lookup;
  for (auto const &rid : raw.resources)
  {
    if (!lookup.emplace(rid, inst.resources_.size()).second)
    {
      violations.push_back({ErrorKind::DuplicateResource, rid, "resource declared twice"});
      continue;
    }
    inst.resources_.push_back(Resource{rid, inst.resources_.size()});
  }

  std::vector<std::string> declared;
  declared.reserve(inst.resources_.size());
  for (auto const &r : inst.resources_)
  {
    declared.push_back(r.id);
  }

  inst.auctioneer_ = check_matrix(std::string(kAuctioneer), raw.auctioneer_fairness, declared,
                                  lookup, violations);

  std::set<std::string> seen_bidders;
  for (auto const &rb : raw.bidders)
  {
    if (!seen_bidders.insert(rb.id).second)
    {
      violations.push_back({ErrorKind::DuplicateBidder, rb.id, "bidder id used twice"});
      continue;
    }

    Bidder bidder;
    bidder.id       = rb.id;
    bidder.fairness = check_matrix(rb.id, rb.fairness, declared, lookup, violations);

    std::map<std::uint64_t, std::size_t> seen_sets;
    for (std::size_t k = 0; k < rb.bids.size(); ++k)
    {
      auto const &raw_bid = rb.bids[k];
      std::string const where = rb.id + "/bid[" + std::to_string(k) + "]";

      bool    ok = true;
      ItemSet items;
      for (auto const &rid : raw_bid.items)
      {
        auto it = lookup.find(rid);
        if (it == lookup.end())
        {
          violations.push_back(
              {ErrorKind::UnknownResourceInBid, where + "/" + rid, "bid names undeclared resource"});
          ok = false;
          continue;
        }
        items.insert(it->second);
      }
      if (raw_bid.items.empty())
      {
        violations.push_back({ErrorKind::EmptyBid, where, "bid has no items"});
        ok = false;
      }
      if (raw_bid.amount.is_negative())
      {
        violations.push_back({ErrorKind::NegativeAmount, where,
                              "bid amount " + raw_bid.amount.to_exact() + " is negative"});
        ok = false;
      }
      if (!ok)
      {
        continue;
      }
      if (auto [it, inserted] = seen_sets.emplace(items.mask(), k); !inserted)
      {
        violations.push_back({ErrorKind::DuplicateBidderBid, rb.id + "/" + inst.describe(items),
                              "bids " + std::to_string(it->second) + " and " + std::to_string(k) +
                                  " cover the same resource set"});
        continue;
      }
      bidder.bids.push_back(Bid{rb.id, items, raw_bid.amount});
    }
    inst.bidders_.push_back(std::move(bidder));
  }

  if (!violations.empty())
  {
    throw ValidationError(std::move(violations));
  }
  return inst;
}

Money fair_value(FairnessMatrix const &matrix, ItemSet items)
{
  if (!items.is_subset_of(ItemSet::first_n(matrix.size())))
  {
    throw AuctionError(ErrorKind::UnknownResource,
                       "item outside the " + std::to_string(matrix.size()) +
                           "-resource matrix of " + matrix.owner());
  }
  Money total;
  for (auto i : items.indices())
  {
    total += matrix.at(i);
  }
  return total;
}

Money package_fair_value(FairnessMatrix const &matrix, Package const &package)
{
  ItemSet seen;
  Money   total;
  for (auto const &set : package.sets)
  {
    if (set.intersects(seen))
    {
      throw AuctionError(ErrorKind::OverlappingSets,
                         "package of " + package.owner + " contains overlapping sets");
    }
    seen = seen | set;
    total += fair_value(matrix, set);
  }
  return total;
}

}  // namespace fairauction
