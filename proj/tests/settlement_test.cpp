#include "fairauction/settlement.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fairauction;
using namespace fairauction::testing;

namespace {

Money usd(std::int64_t v)
{
  return Money::from_integer(v);
}

// Every branch of the case analysis collapses to this.
Money closed_form(Money const &upsilon, Money const &pi_bidder, Money const &pi_auctioneer)
{
  return max(upsilon, min(pi_bidder, pi_auctioneer));
}

Money random_money(std::mt19937_64 &rng)
{
  // mix of small integers (to hit equalities) and fractions
  if (rng() % 2 == 0)
  {
    return usd(static_cast<std::int64_t>(rng() % 6));
  }
  return Money(Rational(static_cast<long>(rng() % 200), static_cast<long>(1 + rng() % 7)));
}

}  // namespace

TEST(FinalPayment, CaseExamples)
{
  EXPECT_EQ(final_payment(usd(20), usd(12), usd(15)), (CaseOutcome{usd(20), CaseLabel::Case1}));
  EXPECT_EQ(final_payment(usd(15), usd(12), usd(15)), (CaseOutcome{usd(15), CaseLabel::Case2}));
  EXPECT_EQ(final_payment(usd(10), usd(18), usd(15)), (CaseOutcome{usd(15), CaseLabel::Case3i}));
  EXPECT_EQ(final_payment(usd(10), usd(15), usd(15)), (CaseOutcome{usd(15), CaseLabel::Case3ii}));
  EXPECT_EQ(final_payment(usd(10), usd(8), usd(15)), (CaseOutcome{usd(10), CaseLabel::Case3iiiA}));
  EXPECT_EQ(final_payment(usd(10), usd(10), usd(15)), (CaseOutcome{usd(10), CaseLabel::Case3iiiA}));
  EXPECT_EQ(final_payment(usd(10), usd(12), usd(15)), (CaseOutcome{usd(12), CaseLabel::Case3iiiB}));
}

TEST(FinalPayment, MatchesClosedFormOnAllSmallTriples)
{
  // every ordering with equalities among three values in 0..3
  for (int u = 0; u <= 3; ++u)
  {
    for (int pi = 0; pi <= 3; ++pi)
    {
      for (int pl = 0; pl <= 3; ++pl)
      {
        auto const got = final_payment(usd(u), usd(pi), usd(pl));
        EXPECT_EQ(got.amount, closed_form(usd(u), usd(pi), usd(pl)))
            << u << "," << pi << "," << pl;
      }
    }
  }
}

TEST(FinalPayment, MatchesClosedFormOnRandomTriples)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20000; ++trial)
  {
    Money const u  = random_money(rng);
    Money const pi = random_money(rng);
    Money const pl = random_money(rng);
    auto const  got = final_payment(u, pi, pl);
    ASSERT_EQ(got.amount, closed_form(u, pi, pl));

    // bounds
    EXPECT_LE(u, got.amount);
    EXPECT_LE(got.amount, max(u, pi));

    // label agrees with the ordering of the inputs
    switch (got.label)
    {
    case CaseLabel::Case1:
      EXPECT_GT(u, pl);
      break;
    case CaseLabel::Case2:
      EXPECT_EQ(u, pl);
      break;
    case CaseLabel::Case3i:
      EXPECT_TRUE(u < pl && pi > pl);
      break;
    case CaseLabel::Case3ii:
      EXPECT_TRUE(u < pl && pi == pl);
      break;
    case CaseLabel::Case3iiiA:
      EXPECT_TRUE(u < pl && pi < pl && pi <= u);
      break;
    case CaseLabel::Case3iiiB:
      EXPECT_TRUE(u < pl && pi < pl && pi > u);
      break;
    }

    // monotone in each argument
    Money const bump = random_money(rng);
    EXPECT_LE(got.amount, final_payment(u + bump, pi, pl).amount);
    EXPECT_LE(got.amount, final_payment(u, pi + bump, pl).amount);
    EXPECT_LE(got.amount, final_payment(u, pi, pl + bump).amount);
  }
}

TEST(RedistributeProfit, ProportionalToExcessValuation)
{
  auto const r = redistribute_profit(usd(6), {{"b1", usd(20)}, {"b2", usd(25)}}, usd(15));
  // weights (20-15)/15 = 1/3 and (25-15)/15 = 2/3
  EXPECT_EQ(r.shares.at("b1"), usd(2));
  EXPECT_EQ(r.shares.at("b2"), usd(4));
  EXPECT_EQ(r.retained, Money());
  EXPECT_EQ(r.distributed() + r.retained, r.profit);
}

TEST(RedistributeProfit, NonPositiveWeightsRetainProfit)
{
  auto const r = redistribute_profit(usd(6), {{"b1", usd(15)}, {"b2", usd(3)}}, usd(15));
  EXPECT_EQ(r.shares.at("b1"), Money());
  EXPECT_EQ(r.shares.at("b2"), Money());
  EXPECT_EQ(r.retained, usd(6));
}

TEST(RedistributeProfit, ZeroProfit)
{
  auto const r = redistribute_profit(Money(), {{"b1", usd(20)}}, usd(15));
  EXPECT_EQ(r.shares.at("b1"), Money());
  EXPECT_EQ(r.retained, Money());
  EXPECT_NO_THROW(redistribute_profit(Money(), {{"b1", usd(20)}}, Money()));
}

TEST(RedistributeProfit, ZeroAuctioneerValuation)
{
  try
  {
    redistribute_profit(usd(3), {{"b1", usd(20)}}, Money());
    FAIL();
  }
  catch (AuctionError const &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroAuctioneerValuation);
  }
}

TEST(RedistributeProfit, ConservesOnRandomInputs)
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial)
  {
    Money const profit = random_money(rng);
    Money const pl     = random_money(rng) + usd(1);
    std::vector<std::pair<std::string, Money>> losers;
    for (std::size_t k = 0; k < rng() % 5; ++k)
    {
      losers.emplace_back("b" + std::to_string(k), random_money(rng) * Rational(3));
    }
    auto const r = redistribute_profit(profit, losers, pl);
    EXPECT_EQ(r.distributed() + r.retained, profit);
    for (auto const &[id, share] : r.shares)
    {
      EXPECT_GE(share, Money());
    }
  }
}

TEST(ResolveTie, WorkedExample)
{
  auto const inst = worked_example_instance();
  TieGroup const tie{ItemSet{0, 1, 2}, usd(50), {"b0", "b1"}, "b0"};
  std::map<std::string, FairnessMatrix> matrices;
  for (auto const &b : inst.bidders())
  {
    matrices.emplace(b.id, b.fairness);
  }

  auto const ts = resolve_tie(tie, matrices);
  EXPECT_EQ(ts.utilities.at("b0"), usd(29));
  EXPECT_EQ(ts.utilities.at("b1"), usd(30));
  EXPECT_EQ(ts.shares.at("b0"), Rational(29, 59));
  EXPECT_EQ(ts.shares.at("b1"), Rational(30, 59));
  EXPECT_EQ(to_fixed_string(ts.shares.at("b0") * 100), "49.15");
  EXPECT_EQ(to_fixed_string(ts.shares.at("b1") * 100), "50.85");
  EXPECT_EQ(ts.payments.at("b0"), Money(Rational(1450, 59)));
  EXPECT_EQ(ts.payments.at("b1"), Money(Rational(1500, 59)));
  EXPECT_EQ(ts.payments.at("b0").to_fixed(), "24.58");
  EXPECT_EQ(ts.payments.at("b1").to_fixed(), "25.42");
  EXPECT_EQ(ts.payments.at("b0") + ts.payments.at("b1"), usd(50));
  EXPECT_FALSE(ts.equal_split_fallback);
}

TEST(ResolveTie, IdenticalMatricesSplitEvenly)
{
  FairnessMatrix const g("x", {usd(3), usd(4)});
  auto const ts = resolve_tie(TieGroup{ItemSet{0, 1}, usd(20), {"a", "b"}, "a"}, {{"a", g}, {"b", g}});
  EXPECT_EQ(ts.shares.at("a"), Rational(1, 2));
  EXPECT_EQ(ts.payments.at("b"), usd(10));
}

TEST(ResolveTie, NegativeUtilityClampsToZero)
{
  FairnessMatrix const cheap("x", {usd(2)});
  FairnessMatrix const dear("y", {usd(30)});
  auto const ts = resolve_tie(TieGroup{ItemSet{0}, usd(10), {"a", "b"}, "a"}, {{"a", cheap}, {"b", dear}});
  EXPECT_EQ(ts.utilities.at("b"), usd(-20));
  EXPECT_EQ(ts.shares.at("a"), Rational(1));
  EXPECT_EQ(ts.shares.at("b"), Rational(0));
  EXPECT_EQ(ts.payments.at("a"), usd(10));
}

TEST(ResolveTie, NoPositiveUtilityFallsBackToEqualSplit)
{
  FairnessMatrix const dear("y", {usd(30)});
  auto const ts = resolve_tie(TieGroup{ItemSet{0}, usd(9), {"a", "b", "c"}, "a"},
                              {{"a", dear}, {"b", dear}, {"c", dear}});
  EXPECT_TRUE(ts.equal_split_fallback);
  EXPECT_EQ(ts.shares.at("c"), Rational(1, 3));
  EXPECT_EQ(ts.payments.at("a"), usd(3));
}

TEST(Settle, WorkedExample)
{
  auto const inst   = worked_example_instance();
  auto const report = settle(inst);
  EXPECT_EQ(report.allocation.revenue, usd(50));
  ASSERT_EQ(report.tie_settlements.size(), 1U);
  EXPECT_EQ(report.tie_settlements[0].shares.at("b0"), Rational(29, 59));
  EXPECT_TRUE(report.final_payments.empty());
  EXPECT_TRUE(report.redistributions.empty());
  EXPECT_EQ(report.auctioneer_receipt, usd(50));
  EXPECT_TRUE(report.warnings.empty());
}

TEST(Settle, SoleBidderFallsIntoCaseThree)
{
  auto const inst = InstanceBuilder()
                        .resources({"r0", "r1", "r2"})
                        .auctioneer({8, 10, 15})
                        .bidder("b0", {8, 10, 15})
                        .bid("b0", {"r0"}, 20)
                        .build();
  auto const report = settle(inst);
  ASSERT_EQ(report.final_payments.size(), 1U);
  auto const &fp = report.final_payments[0];
  EXPECT_EQ(fp.upsilon, Money());
  EXPECT_EQ(fp.pi_bidder, usd(8));
  EXPECT_EQ(fp.pi_auctioneer, usd(8));
  EXPECT_EQ(fp.label, CaseLabel::Case3ii);
  EXPECT_EQ(fp.amount, min(fp.pi_bidder, fp.pi_auctioneer));
  EXPECT_EQ(report.auctioneer_receipt, usd(8));
}

TEST(Settle, CaseOneProfitGoesToLosers)
{
  auto const inst = InstanceBuilder()
                        .resources({"r0"})
                        .auctioneer({6})
                        .bidder("b0", {4})
                        .bidder("b1", {9})
                        .bidder("b2", {12})
                        .bid("b0", {"r0"}, 20)
                        .bid("b1", {"r0"}, 12)
                        .bid("b2", {"r0"}, 10)
                        .build();
  auto const report = settle(inst);
  ASSERT_EQ(report.final_payments.size(), 1U);
  EXPECT_EQ(report.final_payments[0].upsilon, usd(12));  // 20 - (20 - 12)
  EXPECT_EQ(report.final_payments[0].label, CaseLabel::Case1);
  ASSERT_EQ(report.redistributions.size(), 1U);
  auto const &r = report.redistributions[0];
  EXPECT_EQ(r.profit, usd(6));
  // weights (9-6)/6 = 1/2 and (12-6)/6 = 1
  EXPECT_EQ(r.shares.at("b1"), usd(2));
  EXPECT_EQ(r.shares.at("b2"), usd(4));
  EXPECT_EQ(report.auctioneer_receipt, usd(6));
}

TEST(Settle, ZeroAuctioneerValuationRetainsProfit)
{
  auto const inst = InstanceBuilder()
                        .resources({"r0"})
                        .auctioneer({0})
                        .bidder("b0", {4})
                        .bidder("b1", {9})
                        .bid("b0", {"r0"}, 20)
                        .bid("b1", {"r0"}, 12)
                        .build();
  auto const report = settle(inst);
  ASSERT_EQ(report.redistributions.size(), 1U);
  EXPECT_EQ(report.redistributions[0].retained, usd(12));
  EXPECT_EQ(report.redistributions[0].shares.at("b1"), Money());
  ASSERT_EQ(report.warnings.size(), 1U);
  EXPECT_NE(report.warnings[0].find("ZeroAuctioneerValuation"), std::string::npos);
  EXPECT_EQ(report.auctioneer_receipt, usd(12));
}

TEST(Settle, EmptyAuction)
{
  try
  {
    settle(load_fixture("empty_bidders.json"));
    FAIL();
  }
  catch (AuctionError const &e)
  {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyAuction);
  }
}

TEST(Settle, ConservationOnRandomInstances)
{
  for (std::uint64_t seed = 0; seed < 400; ++seed)
  {
    auto const inst = seed % 2 == 0 ? random_instance(seed, 5, 4, 15)
                                    : tie_heavy_instance(seed, 1 + seed % 5, 2 + seed % 3);
    if (!inst.has_positive_bid())
    {
      continue;
    }
    auto const report = settle(inst);
    EXPECT_NO_THROW(check_report(report));

    Money expected;
    for (auto const &fp : report.final_payments)
    {
      expected += fp.amount;
      EXPECT_EQ(fp.amount, closed_form(fp.upsilon, fp.pi_bidder, fp.pi_auctioneer));
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
      EXPECT_EQ(shares, Rational(1));
      EXPECT_EQ(paid, ts.amount);
      expected += paid;

      // larger utility never gets a smaller share
      for (auto const &[a, sa] : ts.shares)
      {
        for (auto const &[b, sb] : ts.shares)
        {
          if (ts.utilities.at(a) > ts.utilities.at(b))
          {
            EXPECT_GE(sa, sb);
          }
        }
      }
    }
    for (auto const &r : report.redistributions)
    {
      EXPECT_EQ(r.distributed() + r.retained, r.profit);
      expected -= r.distributed();
    }
    EXPECT_EQ(report.auctioneer_receipt, expected) << "seed " << seed;
  }
}
