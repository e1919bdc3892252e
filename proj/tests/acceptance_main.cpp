// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fairauction/report.hpp"
#include "fairauction/settlement.hpp"
#include "fairauction/sweep.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace fairauction;
using namespace fairauction::testing;

namespace {

using Clock = std::chrono::steady_clock;

/// Thrown by `require` to abort a criterion with a reason.
struct Failure
{
  std::string reason;
};

void require(bool condition, std::string const &what)
{
  if (!condition)
  {
    throw Failure{what};
  }
}

Money usd(std::int64_t v)
{
  return Money::from_integer(v);
}

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion
{
  int                                 number;
  std::string                         title;
  double                              time_limit;  // seconds, 0 = none
  std::function<std::string()>        body;        // returns a detail string
};

std::string example_winner_determination()
{
  auto const inst  = load_fixture("worked_example.json");
  auto const alloc = solve_wdp(inst);
  require(alloc.revenue == usd(50), "revenue " + alloc.revenue.to_exact());
  require(alloc.winning_bids.size() == 1, "expected a single winning bid");
  require(alloc.winning_bids[0].items == ItemSet({0, 1, 2}), "winning set is not {r0,r1,r2}");
  return "revenue 50, bundle {r0,r1,r2}";
}

std::string example_tie_settlement()
{
  auto const inst   = load_fixture("worked_example.json");
  auto const report = settle(inst);
  require(report.ties.size() == 1, "expected one tie group");
  require(report.ties[0].contenders == std::vector<std::string>{"b0", "b1"}, "contenders are not b0, b1");
  require(report.tie_settlements.size() == 1, "expected one tie settlement");
  auto const &ts = report.tie_settlements[0];
  require(ts.shares.at("b0") == Rational(29, 59), "b0 share " + to_exact_string(ts.shares.at("b0")));
  require(ts.shares.at("b1") == Rational(30, 59), "b1 share " + to_exact_string(ts.shares.at("b1")));
  require(to_fixed_string(ts.shares.at("b0") * 100) == "49.15", "b0 percent");
  require(to_fixed_string(ts.shares.at("b1") * 100) == "50.85", "b1 percent");
  require(ts.payments.at("b0") + ts.payments.at("b1") == usd(50), "payments do not sum to 50");
  require(ts.payments.at("b0").to_fixed() == "24.58", "b0 payment " + ts.payments.at("b0").to_fixed());
  require(ts.payments.at("b1").to_fixed() == "25.42", "b1 payment " + ts.payments.at("b1").to_fixed());
  return "shares 29/59, 30/59 (49.15%, 50.85%), payments 24.58 + 25.42 = 50";
}

std::string example_fair_values()
{
  auto const  inst = load_fixture("worked_example.json");
  auto const &g0   = inst.find_bidder("b0")->fairness;
  auto const &g1   = inst.find_bidder("b1")->fairness;
  ItemSet const all{0, 1, 2};
  require(fair_value(g0, ItemSet{0, 2}) == usd(13), "fair_value(G0, {r0,r2})");
  require(package_fair_value(g0, Package{"b0", {all}}) == usd(21), "Pi_01");
  require(package_fair_value(g1, Package{"b1", {all}}) == usd(20), "Pi_11");
  return "13, 21, 20";
}

std::string case_engine_equivalence()
{
  auto check = [](Money const &u, Money const &pi, Money const &pl) {
    Money const expected = max(u, min(pi, pl));
    require(final_payment(u, pi, pl).amount == expected,
            "mismatch at (" + u.to_exact() + ", " + pi.to_exact() + ", " + pl.to_exact() + ")");
  };

  std::size_t count = 0;
  // every equality pattern among three values
  for (int u = 0; u <= 3; ++u)
  {
    for (int pi = 0; pi <= 3; ++pi)
    {
      for (int pl = 0; pl <= 3; ++pl)
      {
        check(usd(u), usd(pi), usd(pl));
        ++count;
      }
    }
  }
  std::mt19937_64 rng(20240601);
  auto draw = [&rng]() {
    return Money(Rational(static_cast<long>(rng() % 1000), static_cast<long>(1 + rng() % 9)));
  };
  for (int i = 0; i < 20000; ++i)
  {
    check(draw(), draw(), draw());
    ++count;
  }
  return std::to_string(count) + " triples, 0 mismatches";
}

std::string wdp_oracle_equivalence()
{
  std::size_t checked = 0;
  auto compare = [&checked](AuctionInstance const &inst, std::string const &label) {
    auto const fast = solve_wdp(inst);
    auto const slow = solve_wdp_bruteforce(inst);
    require(fast.revenue == slow.revenue, label + ": " + fast.revenue.to_exact() + " vs " + slow.revenue.to_exact());
    require(fast.revenue.value() == oracle_revenue(inst), label + ": independent oracle disagrees");
    ++checked;
  };
  compare(load_fixture("worked_example.json"), "worked_example.json");
  compare(load_fixture("two_bidder.json"), "two_bidder.json");
  std::size_t random = 0;
  for (std::uint64_t seed = 0; random < 500; ++seed)
  {
    auto const inst = random_instance(seed, 5, 4, 15);
    if (!inst.has_positive_bid())
    {
      continue;
    }
    compare(inst, "seed " + std::to_string(seed));
    ++random;
  }
  return std::to_string(checked) + " instances, 0 mismatches";
}

std::string vcg_properties()
{
  std::size_t winners = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed)
  {
    auto const inst = random_instance(seed, 5, 4, 15);
    if (!inst.has_positive_bid())
    {
      continue;
    }
    auto const result = gva_payments(inst, solve_wdp(inst));
    for (auto const &[id, p] : result.per_bidder)
    {
      require(!p.discount.is_negative(), "negative discount, seed " + std::to_string(seed));
      require(p.payment <= p.total_bid, "payment above bid, seed " + std::to_string(seed));
      ++winners;
    }
  }
  auto const inst   = load_fixture("two_bidder.json");
  auto const result = gva_payments(inst, solve_wdp(inst));
  require(result.per_bidder.at("b0").payment == usd(7), "b0 pays " + result.per_bidder.at("b0").payment.to_exact());
  require(result.per_bidder.at("b1").payment == usd(0), "b1 pays " + result.per_bidder.at("b1").payment.to_exact());
  return std::to_string(winners) + " winners checked, two-bidder payments (7, 0)";
}

std::string conservation_suite()
{
  std::size_t reports = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed)
  {
    auto const inst = seed % 2 == 0 ? random_instance(seed, 5, 4, 15)
                                    : tie_heavy_instance(seed, 1 + seed % 5, 2 + seed % 3);
    if (!inst.has_positive_bid())
    {
      continue;
    }
    auto const report = settle(inst);
    std::string const at = " (seed " + std::to_string(seed) + ")";
    Money expected;
    for (auto const &fp : report.final_payments)
    {
      expected += fp.amount;
    }
    for (auto const &r : report.redistributions)
    {
      Money distributed;
      for (auto const &[id, share] : r.shares)
      {
        distributed += share;
      }
      require(distributed + r.retained == r.profit, "redistribution does not conserve profit" + at);
      expected -= distributed;
    }
    for (auto const &ts : report.tie_settlements)
    {
      Rational shares = 0;
      Money    paid;
      for (auto const &[id, s] : ts.shares)
      {
        shares += s;
        paid += ts.payments.at(id);
      }
      require(shares == 1, "tie shares do not sum to 1" + at);
      require(paid == ts.amount, "tie payments do not sum to the amount" + at);
      expected += paid;
    }
    require(report.auctioneer_receipt == expected, "receipt identity fails" + at);
    ++reports;
  }
  return std::to_string(reports) + " settlements, exact equality throughout";
}

std::string proposition_harness()
{
  auto const base = load_fixture("worked_example.json");
  std::vector<Rational> const grid{Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  auto const sweep = sweep_propositions(base, SweepAxis::AuctioneerScale, grid);
  require(sweep.samples.size() == grid.size(), "sample count");
  for (auto const &s : sweep.samples)
  {
    require(s.report.has_value(), "sample failed: " + s.error);
  }
  auto const direct = settle(base);
  require(*sweep.samples[1].report == direct, "identity point differs from direct settlement");
  auto const doc = sweep_to_json(base, sweep);
  require(doc["samples"][1]["settlement"] == report_to_json(base, direct), "identity point JSON differs");
  return "4 samples, identity point matches field-for-field";
}

std::string scale_smoke_test()
{
  GeneratorConfig config;
  config.seed                = 2024;
  config.resources           = 10;
  config.bidders             = 8;
  config.max_amount          = 50;
  config.max_bids_per_bidder = 7;
  auto const inst = validate_instance(generate_instance(config));
  std::size_t const bids = inst.all_bids().size();
  require(bids <= 60, "generated " + std::to_string(bids) + " bids");
  auto const report = settle(inst);
  std::ostringstream detail;
  detail << "m=10, n=8, " << bids << " bids, revenue " << report.allocation.revenue.to_fixed();
  return detail.str();
}

}  // namespace

int main()
{
  std::vector<Criterion> const criteria{
      {1, "worked example: winner determination", 1.0, example_winner_determination},
      {2, "worked example: tie settlement", 0.0, example_tie_settlement},
      {3, "worked example: fair values", 0.0, example_fair_values},
      {4, "case engine agrees with closed form", 0.0, case_engine_equivalence},
      {5, "WDP oracle equivalence", 30.0, wdp_oracle_equivalence},
      {6, "VCG properties", 0.0, vcg_properties},
      {7, "conservation suite", 0.0, conservation_suite},
      {8, "proposition harness", 0.0, proposition_harness},
      {9, "scale smoke test", 10.0, scale_smoke_test},
  };

  int failures = 0;
  for (auto const &c : criteria)
  {
    auto const  start = Clock::now();
    bool        ok    = true;
    std::string detail;
    try
    {
      detail = c.body();
    }
    catch (Failure const &f)
    {
      ok     = false;
      detail = f.reason;
    }
    catch (std::exception const &e)
    {
      ok     = false;
      detail = std::string("exception: ") + e.what();
    }
    double const elapsed = seconds_since(start);
    if (ok && c.time_limit > 0 && elapsed >= c.time_limit)
    {
      ok     = false;
      detail = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.time_limit) + " s";
    }
    failures += ok ? 0 : 1;
    std::printf("%s  %d. %s (%.3f s): %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), elapsed,
                detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
