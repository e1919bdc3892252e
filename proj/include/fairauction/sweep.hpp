#pragma once

#include "fairauction/settlement.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairauction {

enum class SweepAxis
{
  AuctioneerScale,  // auctioneer fairness matrix times k
  BidderScale,      // every bidder fairness matrix times k
  BidScale,         // every bid amount times k
};

std::string_view to_string(SweepAxis axis);
/// Accepts the CLI spellings "auctioneer-scale", "bidder-scale", "bid-scale".
std::optional<SweepAxis> parse_axis(std::string_view text);

/// Formula used for per-bidder surplus in sweep reports.
inline constexpr std::string_view kSurplusFormula =
    "surplus_i = sum(won bid amounts, tied sets weighted by share_i) - "
    "(final payments + tie payments) + redistributed shares";

struct SweepSample
{
  Rational                        parameter;
  std::optional<SettlementReport> report;  // empty when settlement failed
  std::string                     error;   // "<ErrorKind>: message" on failure
  Money                           auctioneer_receipt;
  std::map<std::string, Money>    surplus;
};

struct SweepReport
{
  SweepAxis                          axis = SweepAxis::AuctioneerScale;
  std::uint64_t                      seed = 0;
  std::vector<SweepSample>           samples;
  /// "receipt" and "surplus/<bidder>" mapped to increasing, non-decreasing,
  /// constant, non-increasing, decreasing, mixed or insufficient-data.
  std::map<std::string, std::string> trends;
};

/// Surplus of every bidder in the instance under `report`.
std::map<std::string, Money> bidder_surplus(AuctionInstance const &instance,
                                            SettlementReport const &report);

AuctionInstance apply_axis(AuctionInstance const &base, SweepAxis axis, Rational const &factor);

/// Rescales one quantity of `base` over `grid`, settles each point and
/// records receipt and surplus. Failures are recorded per point, not thrown.
/// No axis draws random numbers; `seed` is carried into the report so runs
/// remain labelled.
SweepReport sweep_propositions(AuctionInstance const &base, SweepAxis axis,
                               std::vector<Rational> const &grid, std::uint64_t seed = 0);

/// Trend of a sequence: see SweepReport::trends.
std::string describe_trend(std::vector<Money> const &values);

/// Each sample embeds the full settlement as produced by report_to_json.
nlohmann::ordered_json sweep_to_json(AuctionInstance const &base, SweepReport const &sweep);

}  // namespace fairauction
