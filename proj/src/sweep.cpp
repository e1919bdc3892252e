#include "fairauction/sweep.hpp"

#include "fairauction/report.hpp"

#include <set>

namespace fairauction {

std::string_view to_string(SweepAxis axis)
{
  switch (axis)
  {
  case SweepAxis::AuctioneerScale:
    return "auctioneer-scale";
  case SweepAxis::BidderScale:
    return "bidder-scale";
  case SweepAxis::BidScale:
    return "bid-scale";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view text)
{
  for (auto axis : {SweepAxis::AuctioneerScale, SweepAxis::BidderScale, SweepAxis::BidScale})
  {
    if (to_string(axis) == text)
    {
      return axis;
    }
  }
  return std::nullopt;
}

std::map<std::string, Money> bidder_surplus(AuctionInstance const &instance,
                                            SettlementReport const &report)
{
  std::map<std::string, Money> surplus;
  for (auto const &b : instance.bidders())
  {
    surplus[b.id] = Money();
  }

  std::set<ItemSet> tied;
  for (auto const &ts : report.tie_settlements)
  {
    tied.insert(ts.items);
    for (auto const &[id, share] : ts.shares)
    {
      surplus[id] += ts.amount.scaled(share) - ts.payments.at(id);
    }
  }
  for (auto const &w : report.allocation.winning_bids)
  {
    if (tied.count(w.items) == 0)
    {
      surplus[w.bidder] += w.amount;
    }
  }
  for (auto const &fp : report.final_payments)
  {
    surplus[fp.bidder] -= fp.amount;
  }
  for (auto const &r : report.redistributions)
  {
    for (auto const &[id, share] : r.shares)
    {
      surplus[id] += share;
    }
  }
  return surplus;
}

AuctionInstance apply_axis(AuctionInstance const &base, SweepAxis axis, Rational const &factor)
{
  switch (axis)
  {
  case SweepAxis::AuctioneerScale:
    return base.with_auctioneer_scaled(factor);
  case SweepAxis::BidderScale:
    return base.with_bidder_fairness_scaled(factor);
  case SweepAxis::BidScale:
    return base.with_bids_scaled(factor);
  }
  return base;
}

std::string describe_trend(std::vector<Money> const &values)
{
  if (values.size() < 2)
  {
    return "insufficient-data";
  }
  bool up   = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i)
  {
    up   = up || values[i] > values[i - 1];
    down = down || values[i] < values[i - 1];
  }
  if (up && down)
  {
    return "mixed";
  }
  if (!up && !down)
  {
    return "constant";
  }
  bool strict = true;
  for (std::size_t i = 1; i < values.size(); ++i)
  {
    strict = strict && values[i] != values[i - 1];
  }
  if (up)
  {
    return strict ? "increasing" : "non-decreasing";
  }
  return strict ? "decreasing" : "non-increasing";
}

SweepReport sweep_propositions(AuctionInstance const &base, SweepAxis axis,
                               std::vector<Rational> const &grid, std::uint64_t seed)
{
  SweepReport sweep;
  sweep.axis = axis;
  sweep.seed = seed;

  for (auto const &k : grid)
  {
    SweepSample sample;
    sample.parameter = k;
    try
    {
      AuctionInstance const scaled = apply_axis(base, axis, k);
      SettlementReport      report = settle(scaled);
      sample.auctioneer_receipt    = report.auctioneer_receipt;
      sample.surplus               = bidder_surplus(scaled, report);
      sample.report                = std::move(report);
    }
    catch (AuctionError const &e)
    {
      sample.error = e.what();
    }
    sweep.samples.push_back(std::move(sample));
  }

  std::vector<Money>                        receipts;
  std::map<std::string, std::vector<Money>> surpluses;
  for (auto const &s : sweep.samples)
  {
    if (!s.report)
    {
      continue;
    }
    receipts.push_back(s.auctioneer_receipt);
    for (auto const &[id, value] : s.surplus)
    {
      surpluses[id].push_back(value);
    }
  }
  sweep.trends["receipt"] = describe_trend(receipts);
  for (auto const &b : base.bidders())
  {
    sweep.trends["surplus/" + b.id] = describe_trend(surpluses[b.id]);
  }
  return sweep;
}

nlohmann::ordered_json sweep_to_json(AuctionInstance const &base, SweepReport const &sweep)
{
  using Json = nlohmann::ordered_json;

  Json doc;
  doc["axis"]           = std::string(to_string(sweep.axis));
  doc["seed"]           = sweep.seed;
  doc["surplus_formula"] = std::string(kSurplusFormula);

  Json samples = Json::array();
  for (auto const &s : sweep.samples)
  {
    Json js;
    js["parameter"] = {{"exact", to_exact_string(s.parameter)},
                       {"rounded", to_fixed_string(s.parameter, 2)}};
    if (s.report)
    {
      js["status"]             = "ok";
      js["auctioneer_receipt"] = money_json(s.auctioneer_receipt);
      Json surplus             = Json::object();
      for (auto const &[id, value] : s.surplus)
      {
        surplus[id] = money_json(value);
      }
      js["surplus"] = std::move(surplus);
      // item ids do not change under rescaling, so the base names them
      js["settlement"] = report_to_json(base, *s.report);
    }
    else
    {
      js["status"] = "error";
      js["error"]  = s.error;
    }
    samples.push_back(std::move(js));
  }
  doc["samples"] = std::move(samples);

  Json trends = Json::object();
  for (auto const &[key, trend] : sweep.trends)
  {
    trends[key] = trend;
  }
  doc["summary"] = std::move(trends);
  return doc;
}

}  // namespace fairauction
