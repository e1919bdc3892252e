#include "fairauction/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fairauction {

using Json = nlohmann::ordered_json;

Json money_json(Money const &m)
{
  Json j;
  j["exact"]   = m.to_exact();
  j["rounded"] = m.to_fixed(2);
  return j;
}

namespace {

Json share_json(Rational const &share)
{
  Json j;
  j["exact"]   = to_exact_string(share);
  j["percent"] = to_fixed_string(share * 100, 2);
  return j;
}

}  // namespace

Json report_to_json(AuctionInstance const &instance, SettlementReport const &report)
{
  auto items = [&](ItemSet s) { return Json(instance.item_ids(s)); };

  Json doc;
  doc["revenue"] = money_json(report.allocation.revenue);

  Json alloc = Json::array();
  for (auto const &w : report.allocation.winning_bids)
  {
    alloc.push_back({{"bidder", w.bidder}, {"items", items(w.items)}, {"amount", money_json(w.amount)}});
  }
  doc["allocation"] = std::move(alloc);

  Json ties = Json::array();
  for (auto const &t : report.ties)
  {
    ties.push_back({{"items", items(t.items)},
                    {"amount", money_json(t.amount)},
                    {"contenders", t.contenders},
                    {"winner_of_record", t.winner_of_record}});
  }
  doc["ties"] = std::move(ties);

  Json vcg_bidders = Json::array();
  for (auto const &[id, p] : report.vcg.per_bidder)
  {
    vcg_bidders.push_back({{"bidder", id},
                           {"total_bid", money_json(p.total_bid)},
                           {"discount", money_json(p.discount)},
                           {"payment", money_json(p.payment)}});
  }
  Json vcg_packages = Json::array();
  for (auto const &[key, pay] : report.vcg.per_package_pay)
  {
    vcg_packages.push_back(
        {{"bidder", key.first}, {"items", items(key.second)}, {"pay", money_json(pay)}});
  }
  doc["vcg"] = {{"bidders", std::move(vcg_bidders)}, {"packages", std::move(vcg_packages)}};

  Json finals = Json::array();
  for (auto const &fp : report.final_payments)
  {
    finals.push_back({{"bidder", fp.bidder},
                      {"items", items(fp.items)},
                      {"upsilon", money_json(fp.upsilon)},
                      {"pi_bidder", money_json(fp.pi_bidder)},
                      {"pi_auctioneer", money_json(fp.pi_auctioneer)},
                      {"amount", money_json(fp.amount)},
                      {"case", std::string(to_string(fp.label))}});
  }
  doc["final_payments"] = std::move(finals);

  Json redistributions = Json::array();
  for (auto const &r : report.redistributions)
  {
    Json shares = Json::object();
    for (auto const &[id, share] : r.shares)
    {
      shares[id] = money_json(share);
    }
    redistributions.push_back({{"items", items(r.items)},
                               {"winner", r.winner},
                               {"profit", money_json(r.profit)},
                               {"shares", std::move(shares)},
                               {"retained", money_json(r.retained)}});
  }
  doc["redistributions"] = std::move(redistributions);

  Json tie_settlements = Json::array();
  for (auto const &ts : report.tie_settlements)
  {
    Json utilities = Json::object();
    Json shares    = Json::object();
    Json payments  = Json::object();
    std::vector<Rational> exact_payments;
    for (auto const &[id, u] : ts.utilities)
    {
      utilities[id] = money_json(u);
    }
    for (auto const &[id, s] : ts.shares)
    {
      shares[id] = share_json(s);
    }
    for (auto const &[id, p] : ts.payments)
    {
      payments[id] = money_json(p);
      exact_payments.push_back(p.value());
    }
    // rounded parts that still add up to the rounded tie amount
    Json balanced  = Json::object();
    auto const rounded = round_preserving_sum(exact_payments, 2);
    std::size_t k      = 0;
    for (auto const &[id, p] : ts.payments)
    {
      balanced[id] = rounded[k++];
    }
    tie_settlements.push_back({{"items", items(ts.items)},
                               {"amount", money_json(ts.amount)},
                               {"utilities", std::move(utilities)},
                               {"shares", std::move(shares)},
                               {"payments", std::move(payments)},
                               {"payments_balanced", std::move(balanced)},
                               {"equal_split_fallback", ts.equal_split_fallback}});
  }
  doc["tie_settlements"] = std::move(tie_settlements);

  doc["auctioneer_receipt"] = money_json(report.auctioneer_receipt);
  doc["warnings"]           = report.warnings;
  return doc;
}

namespace {

std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width)
  {
    s.insert(0, width - s.size(), ' ');
  }
  return s;
}

}  // namespace

std::string render_text(AuctionInstance const &instance, SettlementReport const &report)
{
  std::ostringstream out;
  auto const        &resources = instance.resources();

  out << "Fair valuations\n";
  out << pad("", 12);
  for (auto const &r : resources)
  {
    out << pad(r.id, 8);
  }
  out << '\n';
  auto matrix_row = [&](std::string const &label, FairnessMatrix const &m) {
    out << std::left << std::setw(12) << label << std::right;
    for (auto const &r : resources)
    {
      out << pad(m.at(r.index).to_exact(), 8);
    }
    out << '\n';
  };
  for (auto const &b : instance.bidders())
  {
    matrix_row(b.id, b.fairness);
  }
  matrix_row(std::string(kAuctioneer), instance.auctioneer_fairness());

  out << "\nBids\n";
  for (auto const &b : instance.bidders())
  {
    out << "  " << b.id << ':';
    for (auto const &bid : b.bids)
    {
      out << ' ' << instance.describe(bid.items) << '=' << bid.amount.to_exact();
    }
    out << '\n';
  }

  out << "\nWinning allocation (revenue " << report.allocation.revenue.to_fixed() << ")\n";
  for (auto const &w : report.allocation.winning_bids)
  {
    out << "  " << w.bidder << ' ' << instance.describe(w.items) << ' ' << w.amount.to_fixed()
        << '\n';
  }

  if (!report.ties.empty())
  {
    out << "\nTies\n";
    for (auto const &t : report.ties)
    {
      out << "  " << instance.describe(t.items) << " at " << t.amount.to_fixed() << ':';
      for (auto const &c : t.contenders)
      {
        out << ' ' << c;
      }
      out << " (winner of record " << t.winner_of_record << ")\n";
    }
  }

  out << "\nGVA payments\n";
  for (auto const &[id, p] : report.vcg.per_bidder)
  {
    out << "  " << id << ": bid " << p.total_bid.to_fixed() << ", discount "
        << p.discount.to_fixed() << ", pays " << p.payment.to_fixed() << '\n';
  }

  if (!report.final_payments.empty())
  {
    out << "\nFinal payments\n";
    for (auto const &fp : report.final_payments)
    {
      out << "  " << fp.bidder << ' ' << instance.describe(fp.items) << ": upsilon "
          << fp.upsilon.to_fixed() << ", pi_bidder " << fp.pi_bidder.to_fixed()
          << ", pi_auctioneer " << fp.pi_auctioneer.to_fixed() << " -> " << to_string(fp.label)
          << ", pays " << fp.amount.to_fixed() << '\n';
    }
  }

  if (!report.redistributions.empty())
  {
    out << "\nProfit redistribution\n";
    for (auto const &r : report.redistributions)
    {
      out << "  " << instance.describe(r.items) << " won by " << r.winner << ": profit "
          << r.profit.to_fixed();
      for (auto const &[id, share] : r.shares)
      {
        out << ", " << id << " gets " << share.to_fixed();
      }
      out << ", retained " << r.retained.to_fixed() << '\n';
    }
  }

  if (!report.tie_settlements.empty())
  {
    out << "\nTie divisions\n";
    for (auto const &ts : report.tie_settlements)
    {
      out << "  " << instance.describe(ts.items) << " at " << ts.amount.to_fixed() << '\n';
      for (auto const &[id, share] : ts.shares)
      {
        out << "    " << id << ": utility " << ts.utilities.at(id).to_exact() << ", share "
            << to_exact_string(share) << " (" << to_fixed_string(share * 100, 2) << "%), pays "
            << ts.payments.at(id).to_fixed() << '\n';
      }
    }
  }

  out << "\nAuctioneer receipt " << report.auctioneer_receipt.to_fixed() << " (exact "
      << report.auctioneer_receipt.to_exact() << ")\n";

  for (auto const &w : report.warnings)
  {
    out << "warning: " << w << '\n';
  }
  return out.str();
}

}  // namespace fairauction
