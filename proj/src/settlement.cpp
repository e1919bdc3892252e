#include "fairauction/settlement.hpp"

#include <algorithm>
#include <set>

namespace fairauction {

std::string_view to_string(CaseLabel label)
{
  switch (label)
  {
  case CaseLabel::Case1:
    return "Case1";
  case CaseLabel::Case2:
    return "Case2";
  case CaseLabel::Case3i:
    return "Case3i";
  case CaseLabel::Case3ii:
    return "Case3ii";
  case CaseLabel::Case3iiiA:
    return "Case3iiiA";
  case CaseLabel::Case3iiiB:
    return "Case3iiiB";
  }
  return "?";
}

CaseOutcome final_payment(Money const &upsilon, Money const &pi_bidder, Money const &pi_auctioneer)
{
  if (upsilon > pi_auctioneer)
  {
    return {upsilon, CaseLabel::Case1};
  }
  if (upsilon == pi_auctioneer)
  {
    return {upsilon, CaseLabel::Case2};
  }
  // the auctioneer would lose pi_auctioneer - upsilon; recover what is fair
  if (pi_bidder > pi_auctioneer)
  {
    return {pi_auctioneer, CaseLabel::Case3i};
  }
  if (pi_bidder == pi_auctioneer)
  {
    return {pi_bidder, CaseLabel::Case3ii};
  }
  if (pi_bidder <= upsilon)
  {
    return {upsilon, CaseLabel::Case3iiiA};
  }
  return {pi_bidder, CaseLabel::Case3iiiB};
}

Money Redistribution::distributed() const
{
  Money total;
  for (auto const &[id, share] : shares)
  {
    total += share;
  }
  return total;
}

Redistribution redistribute_profit(Money const &profit,
                                   std::vector<std::pair<std::string, Money>> const &losers,
                                   Money const &pi_auctioneer)
{
  Redistribution out;
  out.profit = profit;
  for (auto const &[id, pi] : losers)
  {
    out.shares[id] = Money();
  }

  if (profit.is_zero())
  {
    return out;
  }
  if (pi_auctioneer.is_zero())
  {
    throw AuctionError(ErrorKind::ZeroAuctioneerValuation,
                       "profit " + profit.to_exact() +
                           " cannot be weighted against a zero auctioneer valuation");
  }

  std::map<std::string, Rational> weights;
  Rational                        total_weight = 0;
  for (auto const &[id, pi] : losers)
  {
    Rational w = (pi - pi_auctioneer).ratio_to(pi_auctioneer);
    if (w < 0)
    {
      w = 0;
    }
    total_weight += w;
    weights[id] = w;
  }

  if (total_weight == 0)
  {
    out.retained = profit;
    return out;
  }
  for (auto const &[id, w] : weights)
  {
    out.shares[id] = profit.scaled(w / total_weight);
  }
  return out;
}

TieSettlement resolve_tie(TieGroup const &tie,
                          std::map<std::string, FairnessMatrix> const &bidder_matrices)
{
  if (tie.contenders.size() < 2)
  {
    throw AuctionError(ErrorKind::InternalInvariant, "a tie needs at least two contenders");
  }

  TieSettlement out;
  out.items  = tie.items;
  out.amount = tie.amount;

  Money total_utility;
  for (auto const &id : tie.contenders)
  {
    auto it = bidder_matrices.find(id);
    if (it == bidder_matrices.end())
    {
      throw AuctionError(ErrorKind::InternalInvariant, "no fairness matrix for " + id);
    }
    Money const utility = tie.amount - fair_value(it->second, tie.items);
    out.utilities[id]   = utility;
    if (utility.is_positive())
    {
      total_utility += utility;
    }
  }

  if (total_utility.is_zero())
  {
    out.equal_split_fallback = true;
    Rational const each(1, static_cast<unsigned>(tie.contenders.size()));
    for (auto const &id : tie.contenders)
    {
      out.shares[id] = each;
    }
  }
  else
  {
    for (auto const &id : tie.contenders)
    {
      Money const &u = out.utilities[id];
      out.shares[id] = u.is_positive() ? u.ratio_to(total_utility) : Rational(0);
    }
  }

  for (auto const &[id, share] : out.shares)
  {
    out.payments[id] = tie.amount.scaled(share);
  }
  return out;
}

namespace {

std::map<std::string, FairnessMatrix> matrices_of(AuctionInstance const &instance)
{
  std::map<std::string, FairnessMatrix> out;
  for (auto const &b : instance.bidders())
  {
    out.emplace(b.id, b.fairness);
  }
  return out;
}

/// Other bidders holding a positive bid on exactly `items`, with their fair
/// value for it.
std::vector<std::pair<std::string, Money>> losing_bidders(AuctionInstance const &instance,
                                                          std::string const &winner,
                                                          ItemSet items)
{
  std::vector<std::pair<std::string, Money>> out;
  for (auto const &b : instance.bidders())
  {
    if (b.id == winner)
    {
      continue;
    }
    bool const bid_on_it = std::any_of(b.bids.begin(), b.bids.end(), [&](Bid const &bid) {
      return bid.items == items && bid.amount.is_positive();
    });
    if (bid_on_it)
    {
      out.emplace_back(b.id, fair_value(b.fairness, items));
    }
  }
  return out;
}

}  // namespace

SettlementReport settle(AuctionInstance const &instance)
{
  SettlementReport report;
  report.allocation = solve_wdp(instance);
  report.ties       = detect_ties(instance, report.allocation);
  report.vcg        = gva_payments(instance, report.allocation);

  auto const matrices = matrices_of(instance);

  std::set<ItemSet> tied;
  for (auto const &tie : report.ties)
  {
    tied.insert(tie.items);
    TieSettlement ts = resolve_tie(tie, matrices);
    if (ts.equal_split_fallback)
    {
      report.warnings.push_back("NonPositiveUtilitySum: tie on " + instance.describe(tie.items) +
                                " split equally");
    }
    report.tie_settlements.push_back(std::move(ts));
  }

  for (auto const &w : report.allocation.winning_bids)
  {
    if (tied.count(w.items) != 0)
    {
      continue;
    }

    FinalPayment fp;
    fp.bidder        = w.bidder;
    fp.items         = w.items;
    fp.upsilon       = report.vcg.per_package_pay.at({w.bidder, w.items});
    fp.pi_bidder     = fair_value(matrices.at(w.bidder), w.items);
    fp.pi_auctioneer = fair_value(instance.auctioneer_fairness(), w.items);

    auto const outcome = final_payment(fp.upsilon, fp.pi_bidder, fp.pi_auctioneer);
    fp.amount          = outcome.amount;
    fp.label           = outcome.label;

    if (fp.label == CaseLabel::Case1)
    {
      Money const profit = fp.upsilon - fp.pi_auctioneer;
      auto const  losers = losing_bidders(instance, w.bidder, w.items);
      Redistribution r;
      try
      {
        r = redistribute_profit(profit, losers, fp.pi_auctioneer);
      }
      catch (AuctionError const &e)
      {
        if (e.kind() != ErrorKind::ZeroAuctioneerValuation)
        {
          throw;
        }
        r          = redistribute_profit(Money(), losers, fp.pi_auctioneer);
        r.profit   = profit;
        r.retained = profit;
        report.warnings.push_back("ZeroAuctioneerValuation: profit on " +
                                  instance.describe(w.items) + " retained by the auctioneer");
      }
      r.items  = w.items;
      r.winner = w.bidder;
      report.redistributions.push_back(std::move(r));
    }
    report.final_payments.push_back(std::move(fp));
  }

  Money receipt;
  for (auto const &fp : report.final_payments)
  {
    receipt += fp.amount;
  }
  for (auto const &ts : report.tie_settlements)
  {
    for (auto const &[id, pay] : ts.payments)
    {
      receipt += pay;
    }
  }
  for (auto const &r : report.redistributions)
  {
    receipt -= r.distributed();
  }
  report.auctioneer_receipt = receipt;

  check_report(report);
  return report;
}

void check_report(SettlementReport const &report)
{
  auto fail = [](std::string const &what) {
    throw AuctionError(ErrorKind::InternalInvariant, what);
  };

  Money expected;
  for (auto const &fp : report.final_payments)
  {
    if (fp.amount < fp.upsilon || fp.amount > max(fp.upsilon, fp.pi_bidder))
    {
      fail("final payment of " + fp.bidder + " outside [upsilon, max(upsilon, pi_bidder)]");
    }
    expected += fp.amount;
  }
  for (auto const &ts : report.tie_settlements)
  {
    Rational share_sum = 0;
    Money    pay_sum;
    for (auto const &[id, share] : ts.shares)
    {
      if (share < 0 || share > 1)
      {
        fail("tie share of " + id + " outside [0,1]");
      }
      share_sum += share;
    }
    for (auto const &[id, pay] : ts.payments)
    {
      pay_sum += pay;
    }
    if (share_sum != 1 || pay_sum != ts.amount)
    {
      fail("tie settlement does not conserve the tied amount");
    }
    expected += pay_sum;
  }
  for (auto const &r : report.redistributions)
  {
    for (auto const &[id, share] : r.shares)
    {
      if (share.is_negative())
      {
        fail("negative redistribution share for " + id);
      }
    }
    if (r.distributed() + r.retained != r.profit)
    {
      fail("redistribution does not conserve the profit");
    }
    expected -= r.distributed();
  }
  if (expected != report.auctioneer_receipt)
  {
    fail("auctioneer receipt " + report.auctioneer_receipt.to_exact() + " != " +
         expected.to_exact());
  }
}

}  // namespace fairauction
