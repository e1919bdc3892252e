#include "fairauction/wdp.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace fairauction {

std::vector<std::string> Allocation::winners() const
{
  std::vector<std::string> out;
  for (auto const &w : winning_bids)
  {
    if (out.empty() || out.back() != w.bidder)
    {
      out.push_back(w.bidder);
    }
  }
  // canonical order groups bids by bidder, so this is already sorted
  return out;
}

Package Allocation::package_of(std::string const &bidder) const
{
  Package pkg{bidder, {}};
  for (auto const &w : winning_bids)
  {
    if (w.bidder == bidder)
    {
      pkg.sets.push_back(w.items);
    }
  }
  return pkg;
}

Money Allocation::total_bid_of(std::string const &bidder) const
{
  Money total;
  for (auto const &w : winning_bids)
  {
    if (w.bidder == bidder)
    {
      total += w.amount;
    }
  }
  return total;
}

bool Allocation::wins(std::string const &bidder) const
{
  return std::any_of(winning_bids.begin(), winning_bids.end(),
                     [&](WinningBid const &w) { return w.bidder == bidder; });
}

namespace {

bool canonical_less(WinningBid const &a, WinningBid const &b)
{
  return std::tie(a.bidder, a.items) < std::tie(b.bidder, b.items);
}

}  // namespace

bool preferred_allocation(Allocation const &a, Allocation const &b)
{
  if (a.revenue != b.revenue)
  {
    return a.revenue > b.revenue;
  }
  if (a.winning_bids.size() != b.winning_bids.size())
  {
    return a.winning_bids.size() < b.winning_bids.size();
  }
  return std::lexicographical_compare(a.winning_bids.begin(), a.winning_bids.end(),
                                      b.winning_bids.begin(), b.winning_bids.end(), canonical_less);
}

Allocation make_allocation(std::vector<WinningBid> bids)
{
  std::sort(bids.begin(), bids.end(), canonical_less);
  Allocation alloc;
  for (auto const &b : bids)
  {
    alloc.revenue += b.amount;
  }
  alloc.winning_bids = std::move(bids);
  return alloc;
}

namespace {

struct Candidate
{
  WinningBid bid;
  double     amount    = 0.0;  // bound arithmetic only
  double     per_item  = 0.0;
  Rational   per_item_exact;
};

std::vector<Candidate> positive_candidates(AuctionInstance const &instance)
{
  std::vector<Candidate> out;
  for (auto const &bidder : instance.bidders())
  {
    for (auto const &bid : bidder.bids)
    {
      if (!bid.amount.is_positive())
      {
        continue;
      }
      Candidate c;
      c.bid            = WinningBid{bid.bidder, bid.items, bid.amount};
      c.amount         = bid.amount.to_double();
      c.per_item_exact = bid.amount.value() / static_cast<unsigned>(bid.items.size());
      c.per_item       = c.per_item_exact.convert_to<double>();
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Drops bids that some other bid beats strictly on a subset of their items.
/// Such a bid can be swapped for its dominator in any allocation for a strict
/// revenue gain, so it never appears in an optimum. Equal-amount dominance is
/// kept because the swap would only tie and could change the tie-break.
std::vector<Candidate> prune_dominated(std::vector<Candidate> candidates, std::size_t &removed)
{
  std::vector<bool> dominated(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i)
  {
    for (std::size_t j = 0; j < candidates.size() && !dominated[i]; ++j)
    {
      if (i != j && candidates[j].bid.items.is_subset_of(candidates[i].bid.items) &&
          candidates[j].bid.amount > candidates[i].bid.amount)
      {
        dominated[i] = true;
      }
    }
  }
  std::vector<Candidate> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i)
  {
    if (dominated[i])
    {
      ++removed;
    }
    else
    {
      kept.push_back(std::move(candidates[i]));
    }
  }
  return kept;
}

class BranchAndBound
{
public:
  BranchAndBound(std::vector<Candidate> candidates, std::size_t resource_count)
    : candidates_(std::move(candidates))
    , all_(ItemSet::first_n(resource_count))
    , by_lowest_(resource_count)
    , best_per_item_(resource_count, 0.0)
  {
    for (std::size_t k = 0; k < candidates_.size(); ++k)
    {
      by_lowest_[candidates_[k].bid.items.lowest()].push_back(k);
    }
    // amount per item, descending; ties resolved canonically for determinism
    for (auto &bucket : by_lowest_)
    {
      std::sort(bucket.begin(), bucket.end(), [this](std::size_t a, std::size_t b) {
        auto const &ca = candidates_[a];
        auto const &cb = candidates_[b];
        if (ca.per_item_exact != cb.per_item_exact)
        {
          return ca.per_item_exact > cb.per_item_exact;
        }
        return canonical_less(ca.bid, cb.bid);
      });
    }
  }

  Allocation run(SolveStats &stats)
  {
    stats_ = &stats;
    chosen_.clear();
    search(ItemSet(), Money(), 0.0);
    return best_;
  }

private:
  /// Sum over undecided resources of the best per-item price among bids that
  /// fit entirely in the undecided part.
  double upper_bound(ItemSet decided)
  {
    ItemSet const open = all_ - decided;
    for (auto i : open.indices())
    {
      best_per_item_[i] = 0.0;
    }
    for (auto const &c : candidates_)
    {
      if (c.bid.items.intersects(decided))
      {
        continue;
      }
      for (auto i : c.bid.items.indices())
      {
        best_per_item_[i] = std::max(best_per_item_[i], c.per_item);
      }
    }
    double total = 0.0;
    for (auto i : open.indices())
    {
      total += best_per_item_[i];
    }
    return total;
  }

  bool can_prune(double revenue_d, double bound) const
  {
    if (!have_best_)
    {
      return false;
    }
    // Only prune when the bound is clearly below the incumbent. Branches
    // that could tie must still be explored for the tie-break.
    double const best = best_revenue_d_;
    double const slack = 1e-9 * std::max({1.0, std::abs(best), std::abs(revenue_d)});
    return revenue_d + bound < best - slack;
  }

  void offer_leaf(Money const &revenue)
  {
    if (have_best_ && revenue < best_.revenue)
    {
      return;
    }
    std::vector<WinningBid> bids;
    bids.reserve(chosen_.size());
    for (auto k : chosen_)
    {
      bids.push_back(candidates_[k].bid);
    }
    Allocation candidate = make_allocation(std::move(bids));
    if (!have_best_ || preferred_allocation(candidate, best_))
    {
      best_           = std::move(candidate);
      best_revenue_d_ = best_.revenue.to_double();
      have_best_      = true;
    }
  }

  void search(ItemSet decided, Money const &revenue, double revenue_d)
  {
    ++stats_->nodes;
    if (decided == all_)
    {
      offer_leaf(revenue);
      return;
    }

    double const bound = upper_bound(decided);
    if (bound == 0.0)
    {
      // nothing fits any more; the rest stays unsold
      offer_leaf(revenue);
      return;
    }
    if (can_prune(revenue_d, bound))
    {
      return;
    }

    std::size_t const next = (all_ - decided).lowest();
    for (auto k : by_lowest_[next])
    {
      auto const &c = candidates_[k];
      if (c.bid.items.intersects(decided))
      {
        continue;
      }
      chosen_.push_back(k);
      search(decided | c.bid.items, revenue + c.bid.amount, revenue_d + c.amount);
      chosen_.pop_back();
    }
    search(decided | ItemSet::single(next), revenue, revenue_d);
  }

  std::vector<Candidate>                candidates_;
  ItemSet                               all_;
  std::vector<std::vector<std::size_t>> by_lowest_;
  std::vector<double>                   best_per_item_;
  std::vector<std::size_t>              chosen_;

  Allocation  best_;
  double      best_revenue_d_ = 0.0;
  bool        have_best_      = false;
  SolveStats *stats_          = nullptr;
};

}  // namespace

Allocation solve_wdp(AuctionInstance const &instance, SolveStats *stats)
{
  SolveStats local;
  SolveStats &s = stats != nullptr ? *stats : local;
  s             = SolveStats{};

  auto candidates = positive_candidates(instance);
  if (candidates.empty())
  {
    throw AuctionError(ErrorKind::EmptyAuction, "instance has no positive bid");
  }
  candidates       = prune_dominated(std::move(candidates), s.dominated_bids);
  s.candidate_bids = candidates.size();

  BranchAndBound search(std::move(candidates), instance.resource_count());
  Allocation     alloc = search.run(s);
  check_allocation(instance, alloc);
  return alloc;
}

Money optimal_revenue(AuctionInstance const &instance)
{
  if (!instance.has_positive_bid())
  {
    return Money();
  }
  return solve_wdp(instance).revenue;
}

namespace {

class Enumerator
{
public:
  explicit Enumerator(std::vector<Bid> bids)
    : bids_(std::move(bids))
  {}

  Allocation run()
  {
    visit(0, ItemSet());
    return best_;
  }

private:
  void visit(std::size_t k, ItemSet used)
  {
    if (k == bids_.size())
    {
      std::vector<WinningBid> chosen;
      for (auto i : picked_)
      {
        chosen.push_back(WinningBid{bids_[i].bidder, bids_[i].items, bids_[i].amount});
      }
      Allocation alloc = make_allocation(std::move(chosen));
      if (!have_best_ || preferred_allocation(alloc, best_))
      {
        best_      = std::move(alloc);
        have_best_ = true;
      }
      return;
    }
    if (!bids_[k].items.intersects(used))
    {
      picked_.push_back(k);
      visit(k + 1, used | bids_[k].items);
      picked_.pop_back();
    }
    visit(k + 1, used);
  }

  std::vector<Bid>         bids_;
  std::vector<std::size_t> picked_;
  Allocation               best_;
  bool                     have_best_ = false;
};

}  // namespace

Allocation solve_wdp_bruteforce(AuctionInstance const &instance, std::size_t max_resources)
{
  if (instance.resource_count() > max_resources)
  {
    throw AuctionError(ErrorKind::InstanceTooLarge,
                       std::to_string(instance.resource_count()) +
                           " resources exceed the enumeration cap of " +
                           std::to_string(max_resources));
  }
  std::vector<Bid> positive;
  for (auto const &bid : instance.all_bids())
  {
    if (bid.amount.is_positive())
    {
      positive.push_back(bid);
    }
  }
  if (positive.empty())
  {
    throw AuctionError(ErrorKind::EmptyAuction, "instance has no positive bid");
  }
  return Enumerator(std::move(positive)).run();
}

void check_allocation(AuctionInstance const &instance, Allocation const &alloc)
{
  ItemSet used;
  Money   total;
  for (auto const &w : alloc.winning_bids)
  {
    if (w.items.intersects(used))
    {
      throw AuctionError(ErrorKind::InternalInvariant,
                         "winning sets overlap at " + instance.describe(w.items & used));
    }
    used = used | w.items;
    total += w.amount;

    auto const *bidder = instance.find_bidder(w.bidder);
    bool const  present =
        bidder != nullptr && std::any_of(bidder->bids.begin(), bidder->bids.end(), [&](Bid const &b) {
          return b.items == w.items && b.amount == w.amount;
        });
    if (!present)
    {
      throw AuctionError(ErrorKind::InternalInvariant, "winning bid " + w.bidder + " " +
                                                           instance.describe(w.items) +
                                                           " is not in the instance");
    }
  }
  if (total != alloc.revenue)
  {
    throw AuctionError(ErrorKind::InternalInvariant, "revenue " + alloc.revenue.to_exact() +
                                                         " differs from bid sum " +
                                                         total.to_exact());
  }
}

std::vector<TieGroup> detect_ties(AuctionInstance const &instance, Allocation const &alloc)
{
  std::vector<TieGroup> ties;
  for (auto const &w : alloc.winning_bids)
  {
    std::vector<std::string> contenders;
    for (auto const &bidder : instance.bidders())
    {
      for (auto const &bid : bidder.bids)
      {
        if (bid.items == w.items && bid.amount == w.amount)
        {
          contenders.push_back(bidder.id);
        }
      }
    }
    if (contenders.size() >= 2)
    {
      std::sort(contenders.begin(), contenders.end());
      ties.push_back(TieGroup{w.items, w.amount, std::move(contenders), w.bidder});
    }
  }
  return ties;
}

}  // namespace fairauction
