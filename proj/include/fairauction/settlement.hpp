#pragma once

#include "fairauction/vcg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairauction {

/// Which branch of the fairness-adjusted payment rule applied. Υ is the GVA
/// payment for the set, Π_i the winner's fair value, Π_λ the auctioneer's.
enum class CaseLabel
{
  Case1,      // Υ > Π_λ            pays Υ, surplus is redistributed
  Case2,      // Υ = Π_λ            pays Υ
  Case3i,     // Υ < Π_λ, Π_i > Π_λ  pays Π_λ
  Case3ii,    // Υ < Π_λ, Π_i = Π_λ  pays Π_i
  Case3iiiA,  // Υ < Π_λ, Π_i < Π_λ, Π_i <= Υ  pays Υ
  Case3iiiB,  // Υ < Π_λ, Π_i < Π_λ, Π_i > Υ   pays Π_i
};

std::string_view to_string(CaseLabel label);

struct CaseOutcome
{
  Money     amount;
  CaseLabel label;

  friend bool operator==(CaseOutcome const &, CaseOutcome const &) = default;
};

/// The case analysis, branch by branch. All inputs must be non-negative.
CaseOutcome final_payment(Money const &upsilon, Money const &pi_bidder, Money const &pi_auctioneer);

struct FinalPayment
{
  std::string bidder;
  ItemSet     items;
  Money       upsilon;
  Money       pi_bidder;
  Money       pi_auctioneer;
  Money       amount;
  CaseLabel   label = CaseLabel::Case2;

  friend bool operator==(FinalPayment const &, FinalPayment const &) = default;
};

struct Redistribution
{
  ItemSet                      items;
  std::string                  winner;
  Money                        profit;
  std::map<std::string, Money> shares;
  Money                        retained;

  Money distributed() const;

  friend bool operator==(Redistribution const &, Redistribution const &) = default;
};

/// Splits a Case-1 profit among losing bidders in proportion to
/// max(0, (Π_k - Π_λ) / Π_λ). Whatever cannot be split stays with the
/// auctioneer as `retained`.
///
/// Throws ZeroAuctioneerValuation when Π_λ = 0 and profit > 0.
Redistribution redistribute_profit(Money const &profit,
                                   std::vector<std::pair<std::string, Money>> const &losers,
                                   Money const &pi_auctioneer);

struct TieSettlement
{
  ItemSet                         items;
  Money                           amount;
  std::map<std::string, Money>    utilities;  // bid minus own fair value, unclamped
  std::map<std::string, Rational> shares;
  std::map<std::string, Money>    payments;
  bool                            equal_split_fallback = false;

  friend bool operator==(TieSettlement const &, TieSettlement const &) = default;
};

/// Divides a tied set among its contenders in proportion to their utilities
/// (bid amount minus own fair value). Negative utilities count as zero; if
/// none is positive the set is split equally and `equal_split_fallback` is
/// set.
TieSettlement resolve_tie(TieGroup const &tie,
                          std::map<std::string, FairnessMatrix> const &bidder_matrices);

struct SettlementReport
{
  Allocation                  allocation;
  std::vector<TieGroup>       ties;
  VcgResult                   vcg;
  std::vector<FinalPayment>   final_payments;
  std::vector<Redistribution> redistributions;
  std::vector<TieSettlement>  tie_settlements;
  Money                       auctioneer_receipt;
  std::vector<std::string>    warnings;

  friend bool operator==(SettlementReport const &, SettlementReport const &) = default;
};

/// Full pipeline: winner determination, tie detection, GVA payments, the
/// per-set case analysis for untied winners, profit redistribution and
/// proportional division of tied sets.
SettlementReport settle(AuctionInstance const &instance);

/// Throws InternalInvariant if any conservation identity of the report fails.
void check_report(SettlementReport const &report);

}  // namespace fairauction
